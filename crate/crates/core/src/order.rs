//! `Inc(N)`-compatible monomial orders.
//!
//! An [`OrderSpec`] ranks symbols by a precedence list (earlier = smaller),
//! orders the variables of one symbol lexicographically by (fixed indices,
//! N-indices) ascending, and compares monomials by reading exponents from
//! the largest variable downward, optionally after total degree. With finite
//! supports and each symbol's variables well-ordered this is a well-order,
//! and the `Inc(N)` action preserves strict inequalities because index
//! substitution is monotone on every index slot.

use std::cmp::Ordering;
use std::collections::BTreeSet;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::algebra::{Coeff, Monomial, Polynomial, Ring, SchemaId, Variable};
use crate::error::{Error, Result};
use crate::symmetry::IncWitness;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Grading {
    /// Pure lexicographic comparison (the default; both shipped presets).
    #[default]
    None,
    /// Compare total degree first, then break ties lexicographically.
    TotalDegreeFirst,
}

/// Declarative description of an `Inc(N)`-compatible monomial order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrderSpec {
    /// Permutation of the ring's schema ids, smallest symbol first. Any
    /// prefix is an elimination block: a monomial free of the suffix
    /// symbols is smaller than any monomial involving one.
    precedence: Vec<SchemaId>,
    grading: Grading,
}

impl OrderSpec {
    pub fn new(ring: &Ring, precedence: Vec<SchemaId>, grading: Grading) -> Result<Self> {
        let n = ring.schemas().len();
        let mut seen = vec![false; n];
        for id in &precedence {
            if id.0 >= n || seen[id.0] {
                return Err(Error::InvalidProblem(format!(
                    "order precedence is not a permutation of the ring's symbols (id {})",
                    id.0
                )));
            }
            seen[id.0] = true;
        }
        if precedence.len() != n {
            return Err(Error::InvalidProblem(
                "order precedence must mention every symbol".into(),
            ));
        }
        Ok(OrderSpec { precedence, grading })
    }

    /// Ungraded lex with symbols ranked in declaration order. On a ring of
    /// one row-indexed symbol this is the row-lexicographic order.
    pub fn declaration_lex(ring: &Ring) -> Self {
        OrderSpec {
            precedence: (0..ring.schemas().len()).map(SchemaId).collect(),
            grading: Grading::None,
        }
    }

    pub fn precedence(&self) -> &[SchemaId] {
        &self.precedence
    }

    pub fn grading(&self) -> Grading {
        self.grading
    }

    fn rank(&self, id: SchemaId) -> usize {
        self.precedence.iter().position(|&s| s == id).expect("schema in precedence")
    }

    /// Total order on variables: precedence rank, then fixed indices, then
    /// N-indices, all ascending.
    pub fn var_cmp(&self, a: &Variable, b: &Variable) -> Ordering {
        self.rank(a.schema())
            .cmp(&self.rank(b.schema()))
            .then_with(|| a.fixed().cmp(b.fixed()))
            .then_with(|| a.free().cmp(b.free()))
    }

    /// Compares monomials: optional total degree, then lexicographically on
    /// exponents read from the largest variable downward. Multiplicative,
    /// total, with 1 as the minimum.
    pub fn compare(&self, a: &Monomial, b: &Monomial) -> Ordering {
        if self.grading == Grading::TotalDegreeFirst {
            match a.total_degree().cmp(&b.total_degree()) {
                Ordering::Equal => {}
                other => return other,
            }
        }
        // Walk each schema block from the largest symbol down; within a
        // block the structural factor order coincides with var_cmp, so the
        // per-block slices can be walked back to front.
        for &sid in self.precedence.iter().rev() {
            let fa = schema_slice(a, sid);
            let fb = schema_slice(b, sid);
            let (mut i, mut j) = (fa.len(), fb.len());
            while i > 0 || j > 0 {
                match (i, j) {
                    (0, _) => return Ordering::Less,
                    (_, 0) => return Ordering::Greater,
                    _ => {
                        let (va, ea) = &fa[i - 1];
                        let (vb, eb) = &fb[j - 1];
                        match va.cmp(vb) {
                            Ordering::Greater => return Ordering::Greater,
                            Ordering::Less => return Ordering::Less,
                            Ordering::Equal => match ea.cmp(eb) {
                                Ordering::Equal => {
                                    i -= 1;
                                    j -= 1;
                                }
                                other => return other,
                            },
                        }
                    }
                }
            }
        }
        Ordering::Equal
    }

    /// The compare-maximal term of a nonzero polynomial.
    pub fn leading_term<'a>(&self, f: &'a Polynomial) -> Result<(&'a Monomial, &'a Coeff)> {
        f.terms()
            .iter()
            .max_by(|(m, _), (n, _)| self.compare(m, n))
            .map(|(m, c)| (m, c))
            .ok_or(Error::ZeroPolynomial)
    }

    pub fn leading_monomial<'a>(&self, f: &'a Polynomial) -> Result<&'a Monomial> {
        Ok(self.leading_term(f)?.0)
    }

    /// Terms in decreasing order, for printing and normal forms.
    pub fn terms_desc<'a>(&self, f: &'a Polynomial) -> Vec<&'a (Monomial, Coeff)> {
        let mut ts: Vec<&(Monomial, Coeff)> = f.terms().iter().collect();
        ts.sort_by(|(m, _), (n, _)| self.compare(n, m));
        ts
    }

    /// Divides by the leading coefficient so the leading coefficient is 1.
    pub fn make_monic(&self, f: &Polynomial) -> Result<Polynomial> {
        let (_, lc) = self.leading_term(f)?;
        if lc.is_one() {
            return Ok(f.clone());
        }
        f.scale(&lc.inv())
    }

    /// True when the order eliminates everything outside `kept`: ungraded,
    /// with the kept symbols forming a prefix of the precedence list.
    pub fn is_elimination_for(&self, kept: &BTreeSet<SchemaId>) -> bool {
        if self.grading != Grading::None {
            return false;
        }
        self.precedence[..kept.len().min(self.precedence.len())]
            .iter()
            .all(|id| kept.contains(id))
            && kept.len() <= self.precedence.len()
    }
}

fn schema_slice(m: &Monomial, sid: SchemaId) -> &[(Variable, u32)] {
    let fs = m.factors();
    let lo = fs.partition_point(|(v, _)| v.schema() < sid);
    let hi = fs.partition_point(|(v, _)| v.schema() <= sid);
    &fs[lo..hi]
}

/// Outcome of the randomized `Inc(N)`-compatibility check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CompatReport {
    pub samples: u64,
    pub passed: bool,
    pub failure: Option<CompatFailure>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CompatFailure {
    /// Which property failed: "monotone" (u < v but pi u >= pi v) or
    /// "inflation" (pi u < u).
    pub property: &'static str,
    pub u: Monomial,
    pub v: Option<Monomial>,
    pub witness: IncWitness,
}

/// Samples random triples (u, v, pi) with u < v and checks that the action
/// preserves the strict inequality and that `pi u >= u`. Failures are
/// reported, not raised.
pub fn check_compatibility(
    ring: &Ring,
    spec: &OrderSpec,
    samples: u64,
    seed: u64,
) -> CompatReport {
    check_compatibility_with(ring, |a, b| spec.compare(a, b), samples, seed)
}

/// Same sampler against an arbitrary comparator; lets tests aim it at a
/// deliberately broken order.
pub(crate) fn check_compatibility_with(
    ring: &Ring,
    cmp: impl Fn(&Monomial, &Monomial) -> Ordering,
    samples: u64,
    seed: u64,
) -> CompatReport {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut done = 0u64;
    while done < samples {
        let u = crate::sample::random_monomial(ring, &mut rng, 5, 4, 3);
        let v = crate::sample::random_monomial(ring, &mut rng, 5, 4, 3);
        let (u, v) = match cmp(&u, &v) {
            Ordering::Less => (u, v),
            Ordering::Greater => (v, u),
            Ordering::Equal => continue,
        };
        let mut support: BTreeSet<u32> = u.support();
        support.append(&mut v.support());
        let pi = crate::sample::random_witness(&support, &mut rng, 3);
        let pu = pi.apply(&u).expect("witness covers support");
        let pv = pi.apply(&v).expect("witness covers support");
        if cmp(&pu, &pv) != Ordering::Less {
            return CompatReport {
                samples: done,
                passed: false,
                failure: Some(CompatFailure { property: "monotone", u, v: Some(v.clone()), witness: pi }),
            };
        }
        if cmp(&pu, &u) == Ordering::Less {
            return CompatReport {
                samples: done,
                passed: false,
                failure: Some(CompatFailure { property: "inflation", u, v: None, witness: pi }),
            };
        }
        done += 1;
    }
    CompatReport { samples: done, passed: true, failure: None }
}

/// Convenience: a seeded RNG for callers that sample on their own.
pub fn seeded_rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}
