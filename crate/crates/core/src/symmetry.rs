//! The `Inc(N)` action on variables, monomials, and polynomials.
//!
//! Elements of `Inc(N)` — strictly increasing maps `N -> N` — are never held
//! in full. An [`IncWitness`] records a restriction to a finite support, and
//! validity of a witness means exactly that some strictly increasing total
//! map restricts to it. Because any strictly increasing map satisfies
//! `pi(j) >= j` and maps the `s(i+1) - s(i) - 1` integers between two
//! sources strictly between their targets, a finite map extends to `Inc(N)`
//! iff `t(1) >= s(1)` and consecutive target gaps dominate source gaps.
//! Construction enforces this, so every witness genuinely comes from the
//! monoid.

use std::collections::BTreeSet;

use crate::algebra::{Monomial, Polynomial, Variable};
use crate::error::{Error, Result};

/// A finite restriction of a strictly increasing map `N -> N`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct IncWitness {
    /// (source, target) pairs, sorted strictly increasing in both slots.
    pairs: Vec<(u32, u32)>,
}

impl IncWitness {
    /// Builds a witness from (source, target) pairs, validating that it is
    /// the restriction of an element of `Inc(N)`.
    pub fn new(mut pairs: Vec<(u32, u32)>) -> Result<Self> {
        pairs.sort_unstable();
        for w in pairs.windows(2) {
            let ((s0, t0), (s1, t1)) = (w[0], w[1]);
            if s0 == s1 {
                return Err(Error::InvalidWitness(format!("duplicate source {s0}")));
            }
            if t1 <= t0 {
                return Err(Error::InvalidWitness(format!(
                    "targets not increasing at {s0}->{t0}, {s1}->{t1}"
                )));
            }
            if t1 - t0 < s1 - s0 {
                return Err(Error::InvalidWitness(format!(
                    "gap {s0}..{s1} cannot fit between targets {t0}..{t1}"
                )));
            }
        }
        if let Some(&(s, t)) = pairs.first() {
            if s == 0 || t == 0 {
                return Err(Error::InvalidWitness("indices are 1-based".into()));
            }
            if t < s {
                return Err(Error::InvalidWitness(format!(
                    "{s}->{t} contradicts pi(j) >= j"
                )));
            }
        }
        Ok(IncWitness { pairs })
    }

    /// The identity on a finite support.
    pub fn identity_on(support: impl IntoIterator<Item = u32>) -> Self {
        let set: BTreeSet<u32> = support.into_iter().collect();
        IncWitness { pairs: set.into_iter().map(|i| (i, i)).collect() }
    }

    pub fn pairs(&self) -> &[(u32, u32)] {
        &self.pairs
    }

    pub fn sources(&self) -> impl Iterator<Item = u32> + '_ {
        self.pairs.iter().map(|&(s, _)| s)
    }

    pub fn image(&self, idx: u32) -> Option<u32> {
        self.pairs
            .binary_search_by_key(&idx, |&(s, _)| s)
            .ok()
            .map(|i| self.pairs[i].1)
    }

    pub fn is_identity(&self) -> bool {
        self.pairs.iter().all(|&(s, t)| s == t)
    }

    pub fn covers(&self, support: &BTreeSet<u32>) -> bool {
        support.iter().all(|&i| self.image(i).is_some())
    }

    /// `outer . inner` on the sources of `inner`; `outer` must cover the
    /// targets of `inner`. Restrictions compose like the underlying maps,
    /// so the result is again a valid witness.
    pub fn compose(outer: &IncWitness, inner: &IncWitness) -> Result<IncWitness> {
        let pairs = inner
            .pairs
            .iter()
            .map(|&(s, t)| {
                let u = outer.image(t).ok_or(Error::IncompleteWitness(t))?;
                Ok((s, u))
            })
            .collect::<Result<Vec<_>>>()?;
        IncWitness::new(pairs)
    }

    /// Pointwise-minimal valid extension of the witness to additionally
    /// cover `support`. New sources interpolate at distance from the
    /// nearest assigned source, which always fits because the existing
    /// witness satisfies the gap condition.
    pub fn extend_min(&self, support: &BTreeSet<u32>) -> IncWitness {
        let mut pairs = self.pairs.clone();
        for &s in support {
            if self.image(s).is_some() {
                continue;
            }
            let pos = pairs.partition_point(|&(src, _)| src < s);
            let t = if pos > 0 {
                let (ps, pt) = pairs[pos - 1];
                pt + (s - ps)
            } else if let Some(&(ns, nt)) = pairs.get(pos) {
                // nt >= ns >= s is guaranteed, and nt - (ns - s) >= s >= 1.
                nt - (ns - s)
            } else {
                s
            };
            pairs.insert(pos, (s, t));
        }
        IncWitness { pairs }
    }

    pub fn restrict(&self, support: &BTreeSet<u32>) -> IncWitness {
        IncWitness {
            pairs: self.pairs.iter().copied().filter(|(s, _)| support.contains(s)).collect(),
        }
    }

    /// Applies the witness to a value carrying N-indices.
    pub fn apply<T: IncAction>(&self, value: &T) -> Result<T> {
        value.apply_inc(self)
    }
}

/// Values acted on by `Inc(N)` through index substitution.
pub trait IncAction: Sized {
    fn apply_inc(&self, pi: &IncWitness) -> Result<Self>;
}

impl IncAction for Variable {
    fn apply_inc(&self, pi: &IncWitness) -> Result<Self> {
        let free = self
            .free()
            .iter()
            .map(|&j| pi.image(j).ok_or(Error::IncompleteWitness(j)))
            .collect::<Result<Vec<_>>>()?;
        // Strictly increasing maps preserve every index constraint.
        Ok(Variable::raw(self.schema(), self.fixed().to_vec(), free))
    }
}

impl IncAction for Monomial {
    fn apply_inc(&self, pi: &IncWitness) -> Result<Self> {
        let factors = self
            .factors()
            .iter()
            .map(|(v, e)| Ok((v.apply_inc(pi)?, *e)))
            .collect::<Result<Vec<_>>>()?;
        Ok(Monomial::from_factors(factors))
    }
}

impl IncAction for Polynomial {
    fn apply_inc(&self, pi: &IncWitness) -> Result<Self> {
        let terms = self
            .terms()
            .iter()
            .map(|(m, c)| Ok((m.apply_inc(pi)?, c.clone())))
            .collect::<Result<Vec<_>>>()?;
        Polynomial::from_terms(terms)
    }
}

/// The canonical orbit representative of a monomial: the unique monomial in
/// its orbit whose support is the initial segment `[w]`, together with the
/// witness mapping it back, so `apply(witness, canonical) == m`.
pub fn canonicalize_monomial(m: &Monomial) -> (Monomial, IncWitness) {
    let support: Vec<u32> = m.support().into_iter().collect();
    canonicalize_with(&support, |inv| m.apply_inc(inv).expect("support covered"))
}

/// Polynomial-level canonical form: renumbers by the order-preserving
/// bijection from the full support (union over all terms) to `[w]`.
pub fn canonicalize_polynomial(f: &Polynomial) -> (Polynomial, IncWitness) {
    let support: Vec<u32> = f.support().into_iter().collect();
    canonicalize_with(&support, |inv| f.apply_inc(inv).expect("support covered"))
}

fn canonicalize_with<T>(support: &[u32], apply_inverse: impl FnOnce(&IncWitness) -> T) -> (T, IncWitness) {
    let inverse = IncWitness {
        pairs: support.iter().enumerate().map(|(k, &s)| (s, k as u32 + 1)).collect(),
    };
    let witness = IncWitness {
        pairs: support.iter().enumerate().map(|(k, &s)| (k as u32 + 1, s)).collect(),
    };
    // The inverse direction need not extend to Inc(N); it is only ever
    // evaluated on the given support, so build it without validation.
    (apply_inverse(&inverse), witness)
}

/// All pairs (sigma: [p] -> [t], tau: [q] -> [t]) of strictly increasing
/// maps whose images jointly cover an initial interval `[t]`, `t <= p + q`.
///
/// The diagonal orbits of these pairs cover the full product of the orbits
/// of any two polynomials of widths `p` and `q`: every pair of increasing
/// maps on `[p]`, `[q]` factors as a common increasing map composed with
/// exactly one listed pair. Emission is ordered by `(t, image bitmask of
/// sigma, image bitmask of tau)`, which consumers rely on.
pub fn orbit_pair_decomposition(p: usize, q: usize) -> Vec<(IncWitness, IncWitness)> {
    let mut out = Vec::new();
    for t in p.max(q)..=(p + q) {
        let full: u64 = if t == 64 { u64::MAX } else { (1u64 << t) - 1 };
        for a in masks_with_popcount(t, p) {
            for b in masks_with_popcount(t, q) {
                if a | b == full {
                    out.push((mask_to_witness(a), mask_to_witness(b)));
                }
            }
        }
    }
    out
}

/// All subsets of `[t]` of size `k` as bitmasks in increasing numeric order
/// (Gosper's hack).
fn masks_with_popcount(t: usize, k: usize) -> Vec<u64> {
    assert!(t < 64);
    if k > t {
        return Vec::new();
    }
    if k == 0 {
        return vec![0];
    }
    let limit = 1u64 << t;
    let mut masks = Vec::new();
    let mut m = (1u64 << k) - 1;
    while m < limit {
        masks.push(m);
        let c = m & m.wrapping_neg();
        let r = m + c;
        m = (((r ^ m) >> 2) / c) | r;
    }
    masks
}

fn mask_to_witness(mask: u64) -> IncWitness {
    let mut pairs = Vec::new();
    let mut k = 0u32;
    for bit in 0..64 {
        if mask & (1 << bit) != 0 {
            k += 1;
            pairs.push((k, bit + 1));
        }
    }
    IncWitness { pairs }
}
