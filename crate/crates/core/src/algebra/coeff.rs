use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Coefficient domain of a ring: exact rationals or a prime field.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Field {
    Rational,
    Prime(u64),
}

impl Field {
    pub fn validate(&self) -> Result<()> {
        match self {
            Field::Rational => Ok(()),
            Field::Prime(p) => {
                if is_prime(*p) {
                    Ok(())
                } else {
                    Err(Error::InvalidProblem(format!("{p} is not prime")))
                }
            }
        }
    }

    pub fn one(&self) -> Coeff {
        match self {
            Field::Rational => Coeff::Rat(BigRational::one()),
            Field::Prime(p) => Coeff::Fp { value: 1, modulus: *p },
        }
    }

    pub fn from_i64(&self, n: i64) -> Coeff {
        match self {
            Field::Rational => Coeff::Rat(BigRational::from_integer(BigInt::from(n))),
            Field::Prime(p) => Coeff::Fp {
                value: n.rem_euclid(*p as i64) as u64,
                modulus: *p,
            },
        }
    }

    /// Parses `"n"` or `"n/d"` into a coefficient of this field.
    pub fn parse(&self, s: &str) -> Result<Coeff> {
        let bad = || Error::InvalidProblem(format!("cannot parse coefficient `{s}`"));
        let (num_s, den_s) = match s.split_once('/') {
            Some((n, d)) => (n.trim(), Some(d.trim())),
            None => (s.trim(), None),
        };
        let num: BigInt = num_s.parse().map_err(|_| bad())?;
        let den: BigInt = match den_s {
            Some(d) => d.parse().map_err(|_| bad())?,
            None => BigInt::one(),
        };
        if den.is_zero() {
            return Err(bad());
        }
        match self {
            Field::Rational => Ok(Coeff::Rat(BigRational::new(num, den))),
            Field::Prime(p) => {
                let pv = BigInt::from(*p);
                let n = ((num % &pv) + &pv) % &pv;
                let d = ((den % &pv) + &pv) % &pv;
                let n: u64 = n.try_into().expect("reduced residue fits u64");
                let d: u64 = d.try_into().expect("reduced residue fits u64");
                if d == 0 {
                    return Err(Error::InvalidProblem(format!(
                        "denominator of `{s}` vanishes mod {p}"
                    )));
                }
                Ok(Coeff::Fp {
                    value: mul_mod(n, inv_mod(d, *p), *p),
                    modulus: *p,
                })
            }
        }
    }

    pub fn matches(&self, c: &Coeff) -> bool {
        match (self, c) {
            (Field::Rational, Coeff::Rat(_)) => true,
            (Field::Prime(p), Coeff::Fp { modulus, .. }) => p == modulus,
            _ => false,
        }
    }
}

impl Default for Field {
    fn default() -> Self {
        Field::Rational
    }
}

/// An exact coefficient. Rationals are kept in lowest terms with positive
/// denominator (the `BigRational` normal form); prime-field values are kept
/// reduced in `[0, p)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Coeff {
    Rat(BigRational),
    Fp { value: u64, modulus: u64 },
}

impl Coeff {
    pub fn is_zero(&self) -> bool {
        match self {
            Coeff::Rat(r) => r.is_zero(),
            Coeff::Fp { value, .. } => *value == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Coeff::Rat(r) => r.is_one(),
            Coeff::Fp { value, .. } => *value == 1,
        }
    }

    fn mismatch(&self, other: &Coeff) -> Error {
        Error::DomainMismatch(format!("{self:?} vs {other:?}"))
    }

    pub fn same_domain(&self, other: &Coeff) -> bool {
        match (self, other) {
            (Coeff::Rat(_), Coeff::Rat(_)) => true,
            (Coeff::Fp { modulus: p, .. }, Coeff::Fp { modulus: q, .. }) => p == q,
            _ => false,
        }
    }

    pub fn add(&self, other: &Coeff) -> Result<Coeff> {
        match (self, other) {
            (Coeff::Rat(a), Coeff::Rat(b)) => Ok(Coeff::Rat(a + b)),
            (Coeff::Fp { value: a, modulus: p }, Coeff::Fp { value: b, modulus: q }) if p == q => {
                Ok(Coeff::Fp { value: add_mod(*a, *b, *p), modulus: *p })
            }
            _ => Err(self.mismatch(other)),
        }
    }

    pub fn sub(&self, other: &Coeff) -> Result<Coeff> {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Coeff) -> Result<Coeff> {
        match (self, other) {
            (Coeff::Rat(a), Coeff::Rat(b)) => Ok(Coeff::Rat(a * b)),
            (Coeff::Fp { value: a, modulus: p }, Coeff::Fp { value: b, modulus: q }) if p == q => {
                Ok(Coeff::Fp { value: mul_mod(*a, *b, *p), modulus: *p })
            }
            _ => Err(self.mismatch(other)),
        }
    }

    pub fn neg(&self) -> Coeff {
        match self {
            Coeff::Rat(a) => Coeff::Rat(-a),
            Coeff::Fp { value, modulus } => Coeff::Fp {
                value: if *value == 0 { 0 } else { modulus - value },
                modulus: *modulus,
            },
        }
    }

    /// Multiplicative inverse. The caller guarantees a nonzero value.
    pub fn inv(&self) -> Coeff {
        match self {
            Coeff::Rat(a) => {
                assert!(!a.is_zero(), "inverse of zero");
                Coeff::Rat(a.recip())
            }
            Coeff::Fp { value, modulus } => {
                assert!(*value != 0, "inverse of zero");
                Coeff::Fp { value: inv_mod(*value, *modulus), modulus: *modulus }
            }
        }
    }

    pub fn div(&self, other: &Coeff) -> Result<Coeff> {
        self.mul(&other.inv())
    }

    /// Renders the coefficient the way the input format expects it
    /// (`"n"` or `"n/d"`; prime-field values as the reduced residue).
    pub fn to_input_string(&self) -> String {
        match self {
            Coeff::Rat(r) => {
                if r.denom().is_one() {
                    r.numer().to_string()
                } else {
                    format!("{}/{}", r.numer(), r.denom())
                }
            }
            Coeff::Fp { value, .. } => value.to_string(),
        }
    }

    /// True for rationals with negative numerator; prime-field values are
    /// never negative. Used only for sign-aware pretty-printing.
    pub fn is_negative(&self) -> bool {
        match self {
            Coeff::Rat(r) => r.is_negative(),
            Coeff::Fp { .. } => false,
        }
    }
}

fn add_mod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 + b as u128) % p as u128) as u64
}

fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

fn pow_mod(mut base: u64, mut exp: u64, p: u64) -> u64 {
    let mut acc = 1u64;
    base %= p;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, p);
        }
        base = mul_mod(base, base, p);
        exp >>= 1;
    }
    acc
}

fn inv_mod(a: u64, p: u64) -> u64 {
    pow_mod(a, p - 2, p)
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n % 2 == 0 {
        return n == 2;
    }
    let mut d = 3u64;
    while d.saturating_mul(d) <= n {
        if n % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}
