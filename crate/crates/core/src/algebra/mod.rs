//! Exact coefficients, variables, monomials, and sparse polynomials.

mod coeff;
mod monomial;
mod poly;
mod ring;

pub use coeff::{Coeff, Field};
pub use monomial::Monomial;
pub use poly::Polynomial;
pub use ring::{IndexConstraint, Ring, SchemaId, SymbolSchema, Variable};
