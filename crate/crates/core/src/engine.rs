//! Equivariant division with remainder and the equivariant Buchberger loop.
//!
//! Division reduces modulo the full orbit set `Pi B`: a term is reducible
//! when some basis leading monomial `Pi`-divides it, and the found witness
//! is extended minimally to the whole basis element before subtracting. The
//! completion loop follows the five steps of the equivariant algorithm: the
//! pair queue is seeded with self-pairs as well, each pair is expanded into
//! the finitely many diagonal-orbit representatives, and nonzero remainders
//! join the basis as monic canonical orbit representatives.

use std::cmp::Reverse;
use std::collections::{BTreeSet, BinaryHeap};

use crate::algebra::{Coeff, Monomial, Polynomial, Ring, SchemaId};
use crate::error::{Error, Result};
use crate::order::OrderSpec;
use crate::symmetry::{canonicalize_polynomial, orbit_pair_decomposition, IncWitness};
use crate::wpo::pi_divides;

/// Termination controls. `|_Pi` is not a well-partial-order in general, so
/// the loop may diverge; budgets turn divergence into a reported partial
/// result.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EngineConfig {
    /// Maximum number of pairs taken from the queue.
    pub max_steps: Option<u64>,
    /// Stop as soon as a remainder wider than this would join the basis.
    pub max_width: Option<u32>,
    /// Stop as soon as a remainder of higher total degree would join.
    pub max_degree: Option<u32>,
    /// Skip S-polynomials of decomposition representatives with coprime
    /// leading monomials (valid because the action preserves lcms).
    pub use_product_criterion: bool,
}

impl Default for EngineConfig {
    fn default() -> Self {
        EngineConfig {
            max_steps: None,
            max_width: None,
            max_degree: None,
            use_product_criterion: true,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GBStatus {
    Complete,
    BudgetExhausted,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct GBStats {
    pub pairs_processed: u64,
    pub reductions: u64,
    pub max_width: u32,
}

/// An ordered list of monic, orbit-canonicalized, nonzero polynomials over
/// one ring and order. Construction normalizes and sorts canonically by
/// (width, leading monomial, term count).
#[derive(Clone, Debug, PartialEq)]
pub struct Basis {
    ring: Ring,
    order: OrderSpec,
    elements: Vec<Polynomial>,
}

impl Basis {
    pub fn new(ring: Ring, order: OrderSpec, elements: Vec<Polynomial>) -> Result<Self> {
        let mut normalized = Vec::with_capacity(elements.len());
        for (i, f) in elements.iter().enumerate() {
            ring.validate_polynomial(f)?;
            if f.is_zero() {
                return Err(Error::ZeroGenerator(i));
            }
            let nf = normalize(&order, f)?;
            if !normalized.contains(&nf) {
                normalized.push(nf);
            }
        }
        sort_canonically(&order, &mut normalized)?;
        Ok(Basis { ring, order, elements: normalized })
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn order(&self) -> &OrderSpec {
        &self.order
    }

    pub fn elements(&self) -> &[Polynomial] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    /// The canonicalized leading monomials, as a set.
    pub fn leading_monomials(&self) -> Result<BTreeSet<Monomial>> {
        self.elements
            .iter()
            .map(|f| {
                let lm = self.order.leading_monomial(f)?;
                Ok(crate::symmetry::canonicalize_monomial(lm).0)
            })
            .collect()
    }
}

/// Monic canonical orbit representative.
fn normalize(order: &OrderSpec, f: &Polynomial) -> Result<Polynomial> {
    let (canon, _) = canonicalize_polynomial(f);
    order.make_monic(&canon)
}

/// Sort by (width, leading monomial in the active order, term count), with
/// a structural tiebreak so equal leading monomials still sort stably.
fn sort_canonically(order: &OrderSpec, els: &mut [Polynomial]) -> Result<()> {
    let mut keyed: Vec<(u32, Monomial, usize, Polynomial)> = Vec::with_capacity(els.len());
    for f in els.iter() {
        keyed.push((f.width(), order.leading_monomial(f)?.clone(), f.terms().len(), f.clone()));
    }
    keyed.sort_by(|a, b| {
        a.0.cmp(&b.0)
            .then_with(|| order.compare(&a.1, &b.1))
            .then_with(|| a.2.cmp(&b.2))
            .then_with(|| a.3.cmp(&b.3))
    });
    for (slot, (_, _, _, f)) in els.iter_mut().zip(keyed) {
        *slot = f;
    }
    Ok(())
}

/// One step of a division certificate:
/// `coeff * multiplier * apply(witness, basis[basis_index])` was subtracted.
#[derive(Clone, Debug, PartialEq)]
pub struct ReductionStep {
    pub witness: IncWitness,
    pub basis_index: usize,
    pub multiplier: Monomial,
    pub coeff: Coeff,
}

/// Division with remainder modulo `Pi B`.
///
/// Repeatedly top-reduces the largest reducible term, trying basis elements
/// in list order and taking the first witness `pi_divides` finds, so the
/// result is deterministic. No monomial of the remainder is `Pi`-divisible
/// by any basis leading monomial, and
/// `f = sum(steps) + remainder` exactly.
pub fn reduce(f: &Polynomial, basis: &Basis) -> Result<(Polynomial, Vec<ReductionStep>)> {
    reduce_with(&basis.ring, &basis.order, &basis.elements, f)
}

pub(crate) fn reduce_with(
    ring: &Ring,
    order: &OrderSpec,
    elements: &[Polynomial],
    f: &Polynomial,
) -> Result<(Polynomial, Vec<ReductionStep>)> {
    let mut work = f.clone();
    let mut remainder: Vec<(Monomial, Coeff)> = Vec::new();
    let mut steps = Vec::new();
    'outer: while !work.is_zero() {
        let (lm, lc) = {
            let (m, c) = order.leading_term(&work)?;
            (m.clone(), c.clone())
        };
        for (k, g) in elements.iter().enumerate() {
            let glm = order.leading_monomial(g)?;
            if let Some(w0) = pi_divides(ring, glm, &lm)? {
                let w = w0.extend_min(&g.support());
                let pg = w.apply(g)?;
                let plm = w.apply(glm)?;
                let mult = plm.quotient_of(&lm).expect("pi(lm g) divides the target");
                // Basis elements are monic and the action preserves the
                // order, so pg is monic with leading monomial plm.
                work = work.sub(&pg.mul_term(&mult, &lc)?)?;
                steps.push(ReductionStep {
                    witness: w,
                    basis_index: k,
                    multiplier: mult,
                    coeff: lc,
                });
                continue 'outer;
            }
        }
        remainder.push((lm.clone(), lc.clone()));
        work = work.sub(&Polynomial::term(lm, lc))?;
    }
    Ok((Polynomial::from_terms(remainder)?, steps))
}

/// The ordinary S-polynomial `(l/lt f) f - (l/lt g) g`, `l = lcm` of the
/// leading monomials, normalized by the leading coefficients.
pub fn s_polynomial(f: &Polynomial, g: &Polynomial, order: &OrderSpec) -> Result<Polynomial> {
    let (mf, cf) = order.leading_term(f)?;
    let (mg, cg) = order.leading_term(g)?;
    let l = mf.lcm(mg);
    let a = f.mul_term(&mf.quotient_of(&l).expect("lm divides lcm"), &cf.inv())?;
    let b = g.mul_term(&mg.quotient_of(&l).expect("lm divides lcm"), &cg.inv())?;
    a.sub(&b)
}

#[derive(Clone, Debug, PartialEq)]
pub struct GBResult {
    pub status: GBStatus,
    pub basis: Basis,
    pub stats: GBStats,
}

/// The equivariant Buchberger algorithm.
///
/// Steps: seed the basis with the normalized generators and the pair queue
/// with all pairs including self-pairs; per pair, decompose the product of
/// orbits into diagonal-orbit representatives, reduce each S-polynomial
/// modulo `Pi B`, and append nonzero remainders (monic, canonicalized) with
/// their new pairs including the self-pair. An empty queue means the
/// equivariant Buchberger criterion holds; exhausted budgets return the
/// partial basis.
///
/// Pairs are processed in order of (width of the lcm of the leading
/// monomials, its total degree, insertion sequence), which keeps supports
/// narrow and the witness searches cheap.
pub fn equivariant_buchberger(
    generators: &[Polynomial],
    ring: &Ring,
    order: &OrderSpec,
    config: &EngineConfig,
) -> Result<GBResult> {
    for (i, g) in generators.iter().enumerate() {
        if g.is_zero() {
            return Err(Error::ZeroGenerator(i));
        }
        ring.validate_polynomial(g)?;
    }
    let mut basis: Vec<Polynomial> = Vec::new();
    for g in generators {
        let n = normalize(order, g)?;
        if !basis.contains(&n) {
            basis.push(n);
        }
    }

    let mut stats = GBStats::default();
    stats.max_width = basis.iter().map(|f| f.width()).max().unwrap_or(0);

    type Entry = Reverse<(u32, u32, u64, usize, usize)>;
    let mut queue: BinaryHeap<Entry> = BinaryHeap::new();
    let mut seq = 0u64;
    let push_pair =
        |queue: &mut BinaryHeap<Entry>, basis: &[Polynomial], i: usize, j: usize, seq: &mut u64| -> Result<()> {
            let li = order.leading_monomial(&basis[i])?;
            let lj = order.leading_monomial(&basis[j])?;
            let l = li.lcm(lj);
            queue.push(Reverse((l.width(), l.total_degree(), *seq, i, j)));
            *seq += 1;
            Ok(())
        };
    for i in 0..basis.len() {
        for j in i..basis.len() {
            push_pair(&mut queue, &basis, i, j, &mut seq)?;
        }
    }

    let mut status = GBStatus::Complete;
    'outer: while let Some(Reverse((_, _, _, i, j))) = queue.pop() {
        if config.max_steps.is_some_and(|ms| stats.pairs_processed >= ms) {
            status = GBStatus::BudgetExhausted;
            break;
        }
        stats.pairs_processed += 1;
        let p = basis[i].width() as usize;
        let q = basis[j].width() as usize;
        for (sigma, tau) in orbit_pair_decomposition(p, q) {
            let sf = sigma.apply(&basis[i])?;
            let tg = tau.apply(&basis[j])?;
            if sf == tg {
                continue;
            }
            if config.use_product_criterion {
                let lf = order.leading_monomial(&sf)?;
                let lg = order.leading_monomial(&tg)?;
                if lf.coprime(lg) {
                    continue;
                }
            }
            let s = s_polynomial(&sf, &tg, order)?;
            if s.is_zero() {
                continue;
            }
            let (h, _) = reduce_with(ring, order, &basis, &s)?;
            stats.reductions += 1;
            if h.is_zero() {
                continue;
            }
            let h = normalize(order, &h)?;
            let w = h.width();
            stats.max_width = stats.max_width.max(w);
            if config.max_width.is_some_and(|mw| w > mw)
                || config
                    .max_degree
                    .is_some_and(|md| h.total_degree().unwrap_or(0) > md)
            {
                status = GBStatus::BudgetExhausted;
                break 'outer;
            }
            let new = basis.len();
            basis.push(h);
            for k in 0..=new {
                push_pair(&mut queue, &basis, k, new, &mut seq)?;
            }
        }
    }

    let basis = Basis::new(ring.clone(), order.clone(), basis)?;
    let basis = if status == GBStatus::Complete { interreduce(&basis)? } else { basis };
    Ok(GBResult { status, basis, stats })
}

/// Removes elements whose leading monomial is `Pi`-divisible by another
/// surviving element's, then fully reduces every survivor modulo the
/// others; output monic and canonicalized. The result generates the same
/// `Pi`-stable ideal.
pub fn interreduce(basis: &Basis) -> Result<Basis> {
    let ring = &basis.ring;
    let order = &basis.order;
    let els = &basis.elements;
    let mut keep = vec![true; els.len()];
    for idx in (0..els.len()).rev() {
        let lm = order.leading_monomial(&els[idx])?;
        for jdx in 0..els.len() {
            if jdx == idx || !keep[jdx] {
                continue;
            }
            if pi_divides(ring, order.leading_monomial(&els[jdx])?, lm)?.is_some() {
                keep[idx] = false;
                break;
            }
        }
    }
    let mut kept: Vec<Polynomial> = els
        .iter()
        .zip(&keep)
        .filter_map(|(f, &k)| k.then(|| f.clone()))
        .collect();
    for i in 0..kept.len() {
        let others: Vec<Polynomial> = kept
            .iter()
            .enumerate()
            .filter_map(|(j, f)| (j != i).then(|| f.clone()))
            .collect();
        // The leading monomial survives by minimality, so this only
        // rewrites the tail.
        let (r, _) = reduce_with(ring, order, &others, &kept[i])?;
        kept[i] = normalize(order, &r)?;
    }
    Basis::new(ring.clone(), order.clone(), kept)
}

/// The sub-basis in the kept symbols. For a complete basis under an
/// elimination order whose leading block is `kept`, this is an equivariant
/// basis of the elimination ideal.
pub fn extract_elimination(basis: &Basis, kept: &BTreeSet<SchemaId>) -> Result<Basis> {
    if !basis.order.is_elimination_for(kept) {
        let names: Vec<&str> = kept
            .iter()
            .filter(|id| id.0 < basis.ring.schemas().len())
            .map(|&id| basis.ring.schema(id).name.as_str())
            .collect();
        return Err(Error::NotEliminationOrder(format!(
            "kept symbols {names:?} are not the smallest block of the order"
        )));
    }
    let only_kept = |f: &Polynomial| {
        f.terms()
            .iter()
            .all(|(m, _)| m.factors().iter().all(|(v, _)| kept.contains(&v.schema())))
    };
    let els: Vec<Polynomial> = basis.elements.iter().filter(|f| only_kept(f)).cloned().collect();
    Basis::new(basis.ring.clone(), basis.order.clone(), els)
}

/// Re-checks the equivariant Buchberger criterion exhaustively: every
/// S-polynomial of every decomposition representative of every pair
/// (self-pairs included) must reduce to zero. The product criterion is not
/// used here, so the audit is strictly stronger than the completion loop.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct AuditReport {
    pub pairs: u64,
    pub s_polynomials: u64,
    pub all_reduce_to_zero: bool,
}

pub fn criterion_audit(basis: &Basis) -> Result<AuditReport> {
    let mut report = AuditReport { pairs: 0, s_polynomials: 0, all_reduce_to_zero: true };
    let els = &basis.elements;
    for i in 0..els.len() {
        for j in i..els.len() {
            report.pairs += 1;
            let p = els[i].width() as usize;
            let q = els[j].width() as usize;
            for (sigma, tau) in orbit_pair_decomposition(p, q) {
                let sf = sigma.apply(&els[i])?;
                let tg = tau.apply(&els[j])?;
                if sf == tg {
                    continue;
                }
                let s = s_polynomial(&sf, &tg, &basis.order)?;
                if s.is_zero() {
                    continue;
                }
                report.s_polynomials += 1;
                let (r, _) = reduce_with(&basis.ring, &basis.order, els, &s)?;
                if !r.is_zero() {
                    report.all_reduce_to_zero = false;
                    return Ok(report);
                }
            }
        }
    }
    Ok(report)
}
