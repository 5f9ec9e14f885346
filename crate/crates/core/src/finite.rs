//! Finite-width truncation and a classical Buchberger oracle.
//!
//! Truncating at width `n` restricts all N-indices to `[n]`, which leaves a
//! ring with finitely many variables. The classical Buchberger here is
//! deliberately naive and shares no division or completion code with
//! [`crate::engine`], so agreement between the two paths is evidence rather
//! than tautology.

use std::collections::{BTreeSet, VecDeque};

use crate::algebra::{Coeff, Monomial, Polynomial, Ring, Variable};
use crate::engine::Basis;
use crate::error::{Error, Result};
use crate::order::OrderSpec;
use crate::symmetry::{canonicalize_polynomial, IncWitness};

/// A ring together with a width bound: the variable set is restricted to
/// N-indices inside `[1, width]`.
#[derive(Clone, Debug, PartialEq)]
pub struct TruncatedRing {
    ring: Ring,
    width: u32,
}

impl TruncatedRing {
    pub fn new(ring: Ring, width: u32) -> Self {
        TruncatedRing { ring, width }
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn width(&self) -> u32 {
        self.width
    }

    pub fn validate(&self, f: &Polynomial) -> Result<()> {
        self.ring.validate_polynomial(f)?;
        if let Some(&max) = f.support().iter().next_back() {
            if max > self.width {
                return Err(Error::WidthExceeded { width: max, max: self.width });
            }
        }
        Ok(())
    }
}

/// All images of the basis elements under increasing maps landing within
/// `[width]`, duplicate-free. Errors when an element is too wide to fit.
pub fn orbit_expand(basis: &Basis, width: u32) -> Result<Vec<Polynomial>> {
    orbit_expand_polys(basis.elements(), width)
}

pub fn orbit_expand_polys(elements: &[Polynomial], width: u32) -> Result<Vec<Polynomial>> {
    for g in elements {
        if g.width() > width {
            return Err(Error::WidthExceeded { width: g.width(), max: width });
        }
    }
    Ok(expand_clipped(elements, width))
}

/// Like [`orbit_expand_polys`], but elements wider than the truncation are
/// skipped: their orbits contribute nothing inside `[width]`.
pub fn expand_clipped(elements: &[Polynomial], width: u32) -> Vec<Polynomial> {
    let mut out: BTreeSet<Polynomial> = BTreeSet::new();
    for g in elements {
        let support: Vec<u32> = g.support().into_iter().collect();
        if support.len() as u32 > width {
            continue;
        }
        for w in increasing_maps_into(&support, width) {
            out.insert(w.apply(g).expect("map covers the support"));
        }
    }
    out.into_iter().collect()
}

/// All valid witnesses from `sources` into `[1, width]`, in lexicographic
/// image order. Validity includes the gap condition, so each one extends to
/// an element of `Inc(N)`.
fn increasing_maps_into(sources: &[u32], width: u32) -> Vec<IncWitness> {
    fn rec(
        sources: &[u32],
        width: u32,
        k: usize,
        picked: &mut Vec<(u32, u32)>,
        out: &mut Vec<IncWitness>,
    ) {
        if k == sources.len() {
            out.push(IncWitness::new(picked.clone()).expect("gap condition maintained"));
            return;
        }
        let s = sources[k];
        let lower = match picked.last() {
            None => s,
            Some(&(ps, pt)) => pt + (s - ps),
        };
        let room = (sources.len() - k - 1) as u32;
        let mut t = lower;
        while t + room <= width {
            picked.push((s, t));
            rec(sources, width, k + 1, picked, out);
            picked.pop();
            t += 1;
        }
    }
    let mut out = Vec::new();
    rec(sources, width, 0, &mut Vec::new(), &mut out);
    out
}

/// Classical division with remainder: plain divisibility of leading
/// monomials, first divisor in list order, full normal form.
pub fn plain_reduce(f: &Polynomial, basis: &[Polynomial], order: &OrderSpec) -> Result<Polynomial> {
    let mut work = f.clone();
    let mut remainder: Vec<(Monomial, Coeff)> = Vec::new();
    'outer: while !work.is_zero() {
        let (lm, lc) = {
            let (m, c) = order.leading_term(&work)?;
            (m.clone(), c.clone())
        };
        for g in basis {
            let (glm, glc) = order.leading_term(g)?;
            if glm.divides(&lm) {
                let mult = glm.quotient_of(&lm).expect("divides");
                work = work.sub(&g.mul_term(&mult, &lc.div(glc)?)?)?;
                continue 'outer;
            }
        }
        remainder.push((lm.clone(), lc.clone()));
        work = work.sub(&Polynomial::term(lm, lc))?;
    }
    Polynomial::from_terms(remainder)
}

fn plain_s_polynomial(f: &Polynomial, g: &Polynomial, order: &OrderSpec) -> Result<Polynomial> {
    let (mf, cf) = order.leading_term(f)?;
    let (mg, cg) = order.leading_term(g)?;
    let l = mf.lcm(mg);
    let a = f.mul_term(&mf.quotient_of(&l).expect("lm divides lcm"), &cf.inv())?;
    let b = g.mul_term(&mg.quotient_of(&l).expect("lm divides lcm"), &cg.inv())?;
    a.sub(&b)
}

/// Textbook Buchberger over the finitely many variables of the truncated
/// ring, returning the reduced Groebner basis (minimal, tail-reduced,
/// monic, sorted by leading monomial). Zero generators are dropped.
pub fn finite_buchberger(
    generators: &[Polynomial],
    tring: &TruncatedRing,
    order: &OrderSpec,
) -> Result<Vec<Polynomial>> {
    let mut basis: Vec<Polynomial> = Vec::new();
    for g in generators {
        tring.validate(g)?;
        if g.is_zero() {
            continue;
        }
        let m = order.make_monic(g)?;
        if !basis.contains(&m) {
            basis.push(m);
        }
    }
    let mut pairs: VecDeque<(usize, usize)> = VecDeque::new();
    for i in 0..basis.len() {
        for j in (i + 1)..basis.len() {
            pairs.push_back((i, j));
        }
    }
    while let Some((i, j)) = pairs.pop_front() {
        let s = plain_s_polynomial(&basis[i], &basis[j], order)?;
        if s.is_zero() {
            continue;
        }
        let r = plain_reduce(&s, &basis, order)?;
        if r.is_zero() {
            continue;
        }
        let r = order.make_monic(&r)?;
        let n = basis.len();
        for k in 0..n {
            pairs.push_back((k, n));
        }
        basis.push(r);
    }

    // Reduced form: drop elements with divisible leading monomials, then
    // tail-reduce the survivors.
    let mut keep = vec![true; basis.len()];
    for i in (0..basis.len()).rev() {
        let lm = order.leading_monomial(&basis[i])?.clone();
        for j in 0..basis.len() {
            if i != j && keep[j] && order.leading_monomial(&basis[j])?.divides(&lm) {
                keep[i] = false;
                break;
            }
        }
    }
    let mut kept: Vec<Polynomial> = basis
        .into_iter()
        .zip(keep)
        .filter_map(|(f, k)| k.then_some(f))
        .collect();
    for i in 0..kept.len() {
        let others: Vec<Polynomial> = kept
            .iter()
            .enumerate()
            .filter_map(|(j, f)| (j != i).then(|| f.clone()))
            .collect();
        kept[i] = order.make_monic(&plain_reduce(&kept[i], &others, order)?)?;
    }
    kept.sort_by(|a, b| {
        let la = order.leading_monomial(a).expect("nonzero");
        let lb = order.leading_monomial(b).expect("nonzero");
        order.compare(la, lb).then_with(|| a.cmp(b))
    });
    Ok(kept)
}

/// True iff the two generating sets span the same ideal of the truncated
/// ring: each list reduces to zero modulo the finite Groebner basis of the
/// other.
pub fn same_ideal(
    a: &[Polynomial],
    b: &[Polynomial],
    tring: &TruncatedRing,
    order: &OrderSpec,
) -> Result<bool> {
    let gb_a = finite_buchberger(a, tring, order)?;
    let gb_b = finite_buchberger(b, tring, order)?;
    for f in b {
        if !plain_reduce(f, &gb_a, order)?.is_zero() {
            return Ok(false);
        }
    }
    for f in a {
        if !plain_reduce(f, &gb_b, order)?.is_zero() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Truncation consistency at one width: the orbit-expanded equivariant
/// basis and the orbit-expanded generators span the same ideal of the
/// truncated ring. Elements wider than the truncation are clipped.
pub fn truncation_consistent(
    generators: &[Polynomial],
    gb: &Basis,
    width: u32,
) -> Result<bool> {
    let tring = TruncatedRing::new(gb.ring().clone(), width);
    let expanded_basis = expand_clipped(gb.elements(), width);
    let expanded_gens = expand_clipped(generators, width);
    same_ideal(&expanded_basis, &expanded_gens, &tring, gb.order())
}

/// The expanded equivariant basis is an ordinary Groebner basis of the
/// ideal it generates in the truncation: completing it adds no new leading
/// monomials.
pub fn expansion_is_groebner(gb: &Basis, width: u32) -> Result<bool> {
    let tring = TruncatedRing::new(gb.ring().clone(), width);
    let expanded = expand_clipped(gb.elements(), width);
    let completed = finite_buchberger(&expanded, &tring, gb.order())?;
    for f in &completed {
        let lm = gb.order().leading_monomial(f)?;
        if !expanded
            .iter()
            .any(|g| gb.order().leading_monomial(g).map(|l| l.divides(lm)).unwrap_or(false))
        {
            return Ok(false);
        }
    }
    Ok(true)
}

/// The rings of the rank-one-tensor setup for a given tensor order `k`:
/// coordinates `y_m` with `m` a `k`-tuple of N-indices, and the parameter
/// ring `x_{i,j}` with row `i` in `[k]` and one N-index.
pub fn segre_rings(k: usize) -> Result<(Ring, Ring)> {
    use crate::algebra::{Field, IndexConstraint, SymbolSchema};
    let y_ring = Ring::new(
        vec![SymbolSchema::new("y", vec![], k, IndexConstraint::None)?],
        Field::Rational,
    )?;
    let x_ring = Ring::new(
        vec![SymbolSchema::new("x", vec![k as u32], 1, IndexConstraint::None)?],
        Field::Rational,
    )?;
    Ok((y_ring, x_ring))
}

/// Orbit representatives of the rank-one quadrics
/// `y_{m0 m1} y_{m0' m1'} - y_{m0 m1'} y_{m0' m1}` with all indices in
/// `[2k]`: canonicalized, sign-normalized, duplicate-free.
pub fn segre_quadric_representatives(k: usize) -> Result<Vec<Polynomial>> {
    let (y_ring, _) = segre_rings(k)?;
    let y = y_ring.schema_by_name("y")?;
    let bound = 2 * k as u32;
    let field = y_ring.field();
    let mut out: BTreeSet<Polynomial> = BTreeSet::new();
    let tuples = |len: usize| -> Vec<Vec<u32>> {
        let mut acc = vec![Vec::new()];
        for _ in 0..len {
            acc = acc
                .into_iter()
                .flat_map(|t| {
                    (1..=bound).map(move |i| {
                        let mut u = t.clone();
                        u.push(i);
                        u
                    })
                })
                .collect();
        }
        acc
    };
    for ell in 0..=k {
        for m0 in tuples(ell) {
            for m0p in tuples(ell) {
                for m1 in tuples(k - ell) {
                    for m1p in tuples(k - ell) {
                        let join = |a: &[u32], b: &[u32]| {
                            let mut v = a.to_vec();
                            v.extend_from_slice(b);
                            v
                        };
                        let yv = |idx: Vec<u32>| -> Result<Monomial> {
                            Ok(Monomial::var(Variable::new(&y_ring, y, vec![], idx)?))
                        };
                        let plus = yv(join(&m0, &m1))?.mul(&yv(join(&m0p, &m1p))?);
                        let minus = yv(join(&m0, &m1p))?.mul(&yv(join(&m0p, &m1))?);
                        if plus == minus {
                            continue;
                        }
                        let q = Polynomial::from_terms(vec![
                            (plus, field.from_i64(1)),
                            (minus, field.from_i64(-1)),
                        ])?;
                        let (canon, _) = canonicalize_polynomial(&q);
                        // Sign-normalize on the structurally first term, so
                        // f and -f land on the same representative.
                        let normalized = match canon.terms() {
                            [(_, c), _] if c.is_negative() => canon.neg(),
                            _ => canon,
                        };
                        out.insert(normalized);
                    }
                }
            }
        }
    }
    Ok(out.into_iter().collect())
}

/// Substitutes a monomial for every variable and expands; cancellation is
/// the interesting outcome.
pub fn substitute_monomials(
    f: &Polynomial,
    subst: &dyn Fn(&Variable) -> Result<Monomial>,
) -> Result<Polynomial> {
    let mut terms = Vec::with_capacity(f.terms().len());
    for (m, c) in f.terms() {
        let mut image = Monomial::one();
        for (v, e) in m.factors() {
            image = image.mul(&subst(v)?.pow(*e));
        }
        terms.push((image, c.clone()));
    }
    Polynomial::from_terms(terms)
}

/// The monomial map of the rank-one parametrization:
/// `y_m -> prod_i x_{i, m_i}`.
pub fn segre_substitution(k: usize) -> Result<impl Fn(&Variable) -> Result<Monomial>> {
    let (_, x_ring) = segre_rings(k)?;
    let x = x_ring.schema_by_name("x")?;
    Ok(move |v: &Variable| -> Result<Monomial> {
        let mut image = Monomial::one();
        for (i, &mi) in v.free().iter().enumerate() {
            image = image.mul(&Monomial::var(Variable::new(
                &x_ring,
                x,
                vec![i as u32 + 1],
                vec![mi],
            )?));
        }
        Ok(image)
    })
}
