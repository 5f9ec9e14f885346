//! Equivariant Groebner bases for `Inc(N)`-stable ideals.
//!
//! The crate computes Groebner bases of ideals in polynomial rings with
//! infinitely many variables that are stable under the monoid `Inc(N)` of
//! strictly increasing maps `N -> N` acting on variable indices. A finite
//! basis plus the monoid action stands in for an infinite ordinary basis.
//!
//! Module map:
//!
//! * [`algebra`] — exact coefficients, symbol schemas, variables, monomials,
//!   sparse polynomials.
//! * [`symmetry`] — the `Inc(N)` action, canonical orbit representatives,
//!   and the diagonal decomposition of products of orbits.
//! * [`order`] — `Inc(N)`-compatible monomial orders and leading terms.
//! * [`wpo`] — decision oracles for the componentwise, multiset, sequence
//!   (Higman) and tree (Kruskal) orders, and the `|_Pi` divisibility search.
//! * [`engine`] — equivariant division with remainder, S-polynomials, the
//!   equivariant Buchberger loop, interreduction, elimination extraction.
//! * [`finite`] — finite-width truncation and an independently coded
//!   classical Buchberger used as a correctness oracle.
//! * [`cli`] — the problem-file format and the command drivers behind the
//!   `eqgb` binary.

pub mod algebra;
pub mod cli;
pub mod engine;
pub mod finite;
pub mod order;
pub mod sample;
pub mod symmetry;
pub mod wpo;

mod error;

pub use error::{Error, Result};
