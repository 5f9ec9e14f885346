use std::collections::BTreeSet;

use super::coeff::Coeff;
use super::monomial::Monomial;
use crate::error::{Error, Result};

/// A sparse polynomial: a finite map from monomials to nonzero coefficients.
///
/// Terms are kept sorted by the structural monomial order with no zero
/// coefficients; the zero polynomial is the empty term list. All arithmetic
/// is exact.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Polynomial {
    terms: Vec<(Monomial, Coeff)>,
}

impl Polynomial {
    pub fn zero() -> Self {
        Polynomial::default()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn term(m: Monomial, c: Coeff) -> Self {
        if c.is_zero() {
            Polynomial::zero()
        } else {
            Polynomial { terms: vec![(m, c)] }
        }
    }

    /// Builds from arbitrary terms, merging equal monomials and dropping
    /// zero coefficients. Mixed coefficient domains are rejected.
    pub fn from_terms(terms: impl IntoIterator<Item = (Monomial, Coeff)>) -> Result<Self> {
        let mut ts: Vec<(Monomial, Coeff)> = terms.into_iter().collect();
        if let Some((_, first)) = ts.first() {
            if let Some((_, bad)) = ts.iter().find(|(_, c)| !first.same_domain(c)) {
                return Err(Error::DomainMismatch(format!("{first:?} vs {bad:?}")));
            }
        }
        ts.sort_by(|a, b| a.0.cmp(&b.0));
        let mut merged: Vec<(Monomial, Coeff)> = Vec::with_capacity(ts.len());
        for (m, c) in ts {
            match merged.last_mut() {
                Some((lm, lc)) if *lm == m => *lc = lc.add(&c)?,
                _ => merged.push((m, c)),
            }
        }
        merged.retain(|(_, c)| !c.is_zero());
        Ok(Polynomial { terms: merged })
    }

    pub fn terms(&self) -> &[(Monomial, Coeff)] {
        &self.terms
    }

    pub fn coeff_of(&self, m: &Monomial) -> Option<&Coeff> {
        self.terms
            .binary_search_by(|(t, _)| t.cmp(m))
            .ok()
            .map(|i| &self.terms[i].1)
    }

    pub fn add(&self, other: &Polynomial) -> Result<Polynomial> {
        if let (Some((_, a)), Some((_, b))) = (self.terms.first(), other.terms.first()) {
            if !a.same_domain(b) {
                return Err(Error::DomainMismatch(format!("{a:?} vs {b:?}")));
            }
        }
        let mut out: Vec<(Monomial, Coeff)> =
            Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        while i < self.terms.len() && j < other.terms.len() {
            match self.terms[i].0.cmp(&other.terms[j].0) {
                std::cmp::Ordering::Less => {
                    out.push(self.terms[i].clone());
                    i += 1;
                }
                std::cmp::Ordering::Greater => {
                    out.push(other.terms[j].clone());
                    j += 1;
                }
                std::cmp::Ordering::Equal => {
                    let c = self.terms[i].1.add(&other.terms[j].1)?;
                    if !c.is_zero() {
                        out.push((self.terms[i].0.clone(), c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&self.terms[i..]);
        out.extend_from_slice(&other.terms[j..]);
        Ok(Polynomial { terms: out })
    }

    pub fn neg(&self) -> Polynomial {
        Polynomial { terms: self.terms.iter().map(|(m, c)| (m.clone(), c.neg())).collect() }
    }

    pub fn sub(&self, other: &Polynomial) -> Result<Polynomial> {
        self.add(&other.neg())
    }

    pub fn scale(&self, c: &Coeff) -> Result<Polynomial> {
        if c.is_zero() {
            return Ok(Polynomial::zero());
        }
        let terms = self
            .terms
            .iter()
            .map(|(m, a)| Ok((m.clone(), a.mul(c)?)))
            .collect::<Result<Vec<_>>>()?;
        Ok(Polynomial { terms })
    }

    /// Multiplies by the single term `c * m`.
    pub fn mul_term(&self, m: &Monomial, c: &Coeff) -> Result<Polynomial> {
        if c.is_zero() {
            return Ok(Polynomial::zero());
        }
        let terms = self
            .terms
            .iter()
            .map(|(t, a)| Ok((t.mul(m), a.mul(c)?)))
            .collect::<Result<Vec<_>>>()?;
        Polynomial::from_terms(terms)
    }

    pub fn mul(&self, other: &Polynomial) -> Result<Polynomial> {
        let mut acc: Vec<(Monomial, Coeff)> = Vec::new();
        for (m, c) in &self.terms {
            for (n, d) in &other.terms {
                acc.push((m.mul(n), c.mul(d)?));
            }
        }
        Polynomial::from_terms(acc)
    }

    /// Union of the supports of all monomials.
    pub fn support(&self) -> BTreeSet<u32> {
        let mut s = BTreeSet::new();
        for (m, _) in &self.terms {
            s.append(&mut m.support());
        }
        s
    }

    pub fn width(&self) -> u32 {
        self.support().len() as u32
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.iter().map(|(m, _)| m.total_degree()).max()
    }
}
