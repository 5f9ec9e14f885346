use std::collections::BTreeSet;

use super::ring::Variable;

/// A monomial: a finite product of variables with positive exponents.
///
/// Factors are kept sorted by the structural order on [`Variable`] with no
/// zero exponents, so equality, hashing, and the derived order are all
/// structural and deterministic.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial {
    factors: Vec<(Variable, u32)>,
}

impl Monomial {
    pub fn one() -> Self {
        Monomial::default()
    }

    pub fn var(v: Variable) -> Self {
        Monomial { factors: vec![(v, 1)] }
    }

    /// Builds from arbitrary factors: sorts, merges repeats, drops zeros.
    pub fn from_factors(factors: impl IntoIterator<Item = (Variable, u32)>) -> Self {
        let mut fs: Vec<(Variable, u32)> = factors.into_iter().filter(|(_, e)| *e > 0).collect();
        fs.sort_by(|a, b| a.0.cmp(&b.0));
        let mut merged: Vec<(Variable, u32)> = Vec::with_capacity(fs.len());
        for (v, e) in fs {
            match merged.last_mut() {
                Some((lv, le)) if *lv == v => *le += e,
                _ => merged.push((v, e)),
            }
        }
        Monomial { factors: merged }
    }

    pub fn is_one(&self) -> bool {
        self.factors.is_empty()
    }

    pub fn factors(&self) -> &[(Variable, u32)] {
        &self.factors
    }

    pub fn exponent_of(&self, v: &Variable) -> u32 {
        self.factors
            .binary_search_by(|(w, _)| w.cmp(v))
            .map(|i| self.factors[i].1)
            .unwrap_or(0)
    }

    pub fn total_degree(&self) -> u32 {
        self.factors.iter().map(|(_, e)| e).sum()
    }

    /// The set of N-indices occurring in the monomial.
    pub fn support(&self) -> BTreeSet<u32> {
        let mut s = BTreeSet::new();
        for (v, _) in &self.factors {
            s.extend(v.free().iter().copied());
        }
        s
    }

    pub fn width(&self) -> u32 {
        self.support().len() as u32
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut out = Vec::with_capacity(self.factors.len() + other.factors.len());
        let (mut i, mut j) = (0, 0);
        while i < self.factors.len() && j < other.factors.len() {
            match self.factors[i].0.cmp(&other.factors[j].0) {
                std::cmp::Ordering::Less => {
                    out.push(self.factors[i].clone());
                    i += 1;
                }
                std::cmp::Ordering::Greater => {
                    out.push(other.factors[j].clone());
                    j += 1;
                }
                std::cmp::Ordering::Equal => {
                    out.push((self.factors[i].0.clone(), self.factors[i].1 + other.factors[j].1));
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&self.factors[i..]);
        out.extend_from_slice(&other.factors[j..]);
        Monomial { factors: out }
    }

    /// True iff every exponent of `self` is at most the matching exponent
    /// of `other` (plain divisibility, no symmetry).
    pub fn divides(&self, other: &Monomial) -> bool {
        self.factors.iter().all(|(v, e)| other.exponent_of(v) >= *e)
    }

    /// `other / self`, when `self` divides `other`.
    pub fn quotient_of(&self, other: &Monomial) -> Option<Monomial> {
        if !self.divides(other) {
            return None;
        }
        let out = other
            .factors
            .iter()
            .filter_map(|(v, e)| {
                let d = e - self.exponent_of(v);
                (d > 0).then(|| (v.clone(), d))
            })
            .collect();
        Some(Monomial { factors: out })
    }

    /// Exponentwise maximum.
    pub fn lcm(&self, other: &Monomial) -> Monomial {
        let mut out = Vec::with_capacity(self.factors.len() + other.factors.len());
        let (mut i, mut j) = (0, 0);
        while i < self.factors.len() && j < other.factors.len() {
            match self.factors[i].0.cmp(&other.factors[j].0) {
                std::cmp::Ordering::Less => {
                    out.push(self.factors[i].clone());
                    i += 1;
                }
                std::cmp::Ordering::Greater => {
                    out.push(other.factors[j].clone());
                    j += 1;
                }
                std::cmp::Ordering::Equal => {
                    out.push((
                        self.factors[i].0.clone(),
                        self.factors[i].1.max(other.factors[j].1),
                    ));
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&self.factors[i..]);
        out.extend_from_slice(&other.factors[j..]);
        Monomial { factors: out }
    }

    /// No shared variable; equivalently `lcm(a, b) == a * b`.
    pub fn coprime(&self, other: &Monomial) -> bool {
        self.factors.iter().all(|(v, _)| other.exponent_of(v) == 0)
    }

    pub fn pow(&self, e: u32) -> Monomial {
        if e == 0 {
            return Monomial::one();
        }
        Monomial { factors: self.factors.iter().map(|(v, k)| (v.clone(), k * e)).collect() }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{Field, IndexConstraint, Ring, SymbolSchema, Variable};

    fn row_ring() -> Ring {
        Ring::new(
            vec![SymbolSchema::new("x", vec![2], 1, IndexConstraint::None).unwrap()],
            Field::Rational,
        )
        .unwrap()
    }

    fn x(r: &Ring, i: u32, j: u32) -> Variable {
        Variable::new(r, r.schema_by_name("x").unwrap(), vec![i], vec![j]).unwrap()
    }

    #[test]
    fn mul_merges_exponents() {
        let r = row_ring();
        let x11 = Monomial::var(x(&r, 1, 1));
        assert_eq!(x11.mul(&x11).exponent_of(&x(&r, 1, 1)), 2);
        let m = Monomial::from_factors(vec![(x(&r, 1, 1), 1), (x(&r, 2, 3), 1)]);
        assert_eq!(Monomial::one().mul(&m), m);
        let got = m.mul(&Monomial::var(x(&r, 2, 3)));
        assert_eq!(got.exponent_of(&x(&r, 2, 3)), 2);
        assert_eq!(got.total_degree(), 3);
    }

    #[test]
    fn divisibility() {
        let r = row_ring();
        let x11 = Monomial::var(x(&r, 1, 1));
        let x11x22 = Monomial::from_factors(vec![(x(&r, 1, 1), 1), (x(&r, 2, 2), 1)]);
        assert!(x11.divides(&x11x22));
        let sq = x11.mul(&x11);
        assert!(!sq.divides(&x11));
        assert!(Monomial::one().divides(&sq));
        assert_eq!(x11.quotient_of(&x11x22).unwrap(), Monomial::var(x(&r, 2, 2)));
        assert!(sq.quotient_of(&x11).is_none());
    }

    #[test]
    fn lcm_cases() {
        let r = row_ring();
        let a = Monomial::var(x(&r, 1, 1));
        let b = Monomial::var(x(&r, 2, 1));
        assert_eq!(a.lcm(&b), a.mul(&b)); // coprime
        assert!(a.coprime(&b));
        assert_eq!(a.lcm(&a), a);
        let a2 = a.mul(&a);
        let ab = Monomial::from_factors(vec![(x(&r, 1, 1), 1), (x(&r, 1, 2), 1)]);
        let l = a2.lcm(&ab);
        assert_eq!(l.exponent_of(&x(&r, 1, 1)), 2);
        assert_eq!(l.exponent_of(&x(&r, 1, 2)), 1);
        assert!(!a2.coprime(&ab));
    }

    #[test]
    fn support_and_width() {
        let r = row_ring();
        let m = Monomial::from_factors(vec![(x(&r, 1, 4), 2), (x(&r, 2, 1), 1)]);
        assert_eq!(m.support().into_iter().collect::<Vec<_>>(), vec![1, 4]);
        assert_eq!(m.width(), 2);
        assert_eq!(Monomial::one().width(), 0);
    }
}
