use super::coeff::Field;
use crate::error::{Error, Result};

/// Index of a symbol schema inside its ring (declaration order).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SchemaId(pub usize);

/// Constraint on the tuple of N-indices of a variable family.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum IndexConstraint {
    #[default]
    None,
    /// Indices strictly decrease left to right, e.g. `y_{ij}` with `i > j`.
    StrictlyDecreasing,
    PairwiseDistinct,
}

/// A family of variables: a symbol with bounded fixed indices and a tuple of
/// unbounded N-indices carrying the `Inc(N)` action.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymbolSchema {
    pub name: String,
    /// Per-position upper bound of each fixed index (1-based, inclusive).
    pub fixed_bounds: Vec<u32>,
    pub free_arity: usize,
    pub constraint: IndexConstraint,
}

impl SymbolSchema {
    pub fn new(
        name: impl Into<String>,
        fixed_bounds: Vec<u32>,
        free_arity: usize,
        constraint: IndexConstraint,
    ) -> Result<Self> {
        let name = name.into();
        if name.is_empty() {
            return Err(Error::InvalidSchema("empty symbol name".into()));
        }
        if fixed_bounds.iter().any(|&b| b == 0) {
            return Err(Error::InvalidSchema(format!("symbol `{name}`: fixed bound must be >= 1")));
        }
        if constraint == IndexConstraint::StrictlyDecreasing && free_arity < 2 {
            return Err(Error::InvalidSchema(format!(
                "symbol `{name}`: strictly-decreasing needs free arity >= 2"
            )));
        }
        Ok(SymbolSchema { name, fixed_bounds, free_arity, constraint })
    }
}

/// A polynomial ring: an ordered list of symbol schemas plus a coefficient
/// field. Rings are cheap to clone and compare.
#[derive(Clone, Debug, PartialEq)]
pub struct Ring {
    schemas: Vec<SymbolSchema>,
    field: Field,
}

impl Ring {
    pub fn new(schemas: Vec<SymbolSchema>, field: Field) -> Result<Self> {
        field.validate()?;
        if schemas.is_empty() {
            return Err(Error::InvalidSchema("ring needs at least one symbol".into()));
        }
        for (i, s) in schemas.iter().enumerate() {
            if schemas[..i].iter().any(|t| t.name == s.name) {
                return Err(Error::InvalidSchema(format!("duplicate symbol `{}`", s.name)));
            }
        }
        Ok(Ring { schemas, field })
    }

    pub fn schemas(&self) -> &[SymbolSchema] {
        &self.schemas
    }

    pub fn schema(&self, id: SchemaId) -> &SymbolSchema {
        &self.schemas[id.0]
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn schema_by_name(&self, name: &str) -> Result<SchemaId> {
        self.schemas
            .iter()
            .position(|s| s.name == name)
            .map(SchemaId)
            .ok_or_else(|| Error::UnknownSymbol(name.to_string()))
    }

    /// True when every symbol has at most one N-index, the hypothesis under
    /// which `|_Pi` reduces to a sequence embedding.
    pub fn all_unit_free_arity(&self) -> bool {
        self.schemas.iter().all(|s| s.free_arity <= 1)
    }

    /// Re-checks that a variable belongs to this ring and satisfies its
    /// schema constraints.
    pub fn validate_variable(&self, v: &Variable) -> Result<()> {
        Variable::new(self, v.schema(), v.fixed().to_vec(), v.free().to_vec()).map(|_| ())
    }

    /// Validates every variable of every term, and that the coefficients
    /// live in this ring's field.
    pub fn validate_polynomial(&self, f: &super::Polynomial) -> Result<()> {
        for (m, c) in f.terms() {
            if !self.field.matches(c) {
                return Err(Error::DomainMismatch(format!(
                    "coefficient {c:?} outside the ring's field"
                )));
            }
            for (v, _) in m.factors() {
                self.validate_variable(v)?;
            }
        }
        Ok(())
    }
}

/// A concrete variable: a schema, its fixed indices, and its N-indices.
/// The derived order (schema id, fixed, free — all lexicographic) is the
/// structural order used for canonical storage, independent of any
/// monomial order.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Variable {
    schema: SchemaId,
    fixed: Vec<u32>,
    free: Vec<u32>,
}

impl Variable {
    pub fn new(ring: &Ring, schema: SchemaId, fixed: Vec<u32>, free: Vec<u32>) -> Result<Self> {
        let s = ring
            .schemas
            .get(schema.0)
            .ok_or_else(|| Error::InvalidVariable(format!("schema id {} out of range", schema.0)))?;
        if fixed.len() != s.fixed_bounds.len() {
            return Err(Error::InvalidVariable(format!(
                "symbol `{}` takes {} fixed indices, got {}",
                s.name,
                s.fixed_bounds.len(),
                fixed.len()
            )));
        }
        for (i, (&v, &b)) in fixed.iter().zip(&s.fixed_bounds).enumerate() {
            if v == 0 || v > b {
                return Err(Error::InvalidVariable(format!(
                    "symbol `{}`: fixed index #{} = {} outside [1, {}]",
                    s.name,
                    i + 1,
                    v,
                    b
                )));
            }
        }
        if free.len() != s.free_arity {
            return Err(Error::InvalidVariable(format!(
                "symbol `{}` takes {} N-indices, got {}",
                s.name, s.free_arity, free.len()
            )));
        }
        if free.iter().any(|&j| j == 0) {
            return Err(Error::InvalidVariable(format!("symbol `{}`: N-indices are 1-based", s.name)));
        }
        match s.constraint {
            IndexConstraint::None => {}
            IndexConstraint::StrictlyDecreasing => {
                if !free.windows(2).all(|w| w[0] > w[1]) {
                    return Err(Error::InvalidVariable(format!(
                        "symbol `{}`: indices {:?} must strictly decrease",
                        s.name, free
                    )));
                }
            }
            IndexConstraint::PairwiseDistinct => {
                let mut seen = free.clone();
                seen.sort_unstable();
                if seen.windows(2).any(|w| w[0] == w[1]) {
                    return Err(Error::InvalidVariable(format!(
                        "symbol `{}`: indices {:?} must be pairwise distinct",
                        s.name, free
                    )));
                }
            }
        }
        Ok(Variable { schema, fixed, free })
    }

    /// Constructs without re-validating; for internal use where the indices
    /// come from an already valid variable (the `Inc(N)` action preserves
    /// every schema constraint).
    pub(crate) fn raw(schema: SchemaId, fixed: Vec<u32>, free: Vec<u32>) -> Self {
        Variable { schema, fixed, free }
    }

    pub fn schema(&self) -> SchemaId {
        self.schema
    }

    pub fn fixed(&self) -> &[u32] {
        &self.fixed
    }

    pub fn free(&self) -> &[u32] {
        &self.free
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    pub(crate) fn onefactor_ring() -> Ring {
        Ring::new(
            vec![
                SymbolSchema::new("y", vec![], 2, IndexConstraint::StrictlyDecreasing).unwrap(),
                SymbolSchema::new("x", vec![], 1, IndexConstraint::None).unwrap(),
            ],
            Field::Rational,
        )
        .unwrap()
    }

    #[test]
    fn schema_constraints_validated() {
        assert!(SymbolSchema::new("y", vec![], 1, IndexConstraint::StrictlyDecreasing).is_err());
        assert!(SymbolSchema::new("x", vec![0], 1, IndexConstraint::None).is_err());
    }

    #[test]
    fn variable_validation() {
        let r = onefactor_ring();
        let y = r.schema_by_name("y").unwrap();
        let x = r.schema_by_name("x").unwrap();
        assert!(Variable::new(&r, y, vec![], vec![2, 1]).is_ok());
        assert!(Variable::new(&r, y, vec![], vec![1, 2]).is_err());
        assert!(Variable::new(&r, y, vec![], vec![2, 2]).is_err());
        assert!(Variable::new(&r, x, vec![], vec![0]).is_err());
        assert!(Variable::new(&r, x, vec![1], vec![1]).is_err());
    }

    #[test]
    fn row_ring_fixed_bounds() {
        let r = Ring::new(
            vec![SymbolSchema::new("x", vec![2], 1, IndexConstraint::None).unwrap()],
            Field::Rational,
        )
        .unwrap();
        let x = r.schema_by_name("x").unwrap();
        assert!(Variable::new(&r, x, vec![1], vec![5]).is_ok());
        assert!(Variable::new(&r, x, vec![3], vec![5]).is_err());
    }

    #[test]
    fn structural_order_is_schema_fixed_free() {
        let r = onefactor_ring();
        let y = r.schema_by_name("y").unwrap();
        let x = r.schema_by_name("x").unwrap();
        let y21 = Variable::new(&r, y, vec![], vec![2, 1]).unwrap();
        let y31 = Variable::new(&r, y, vec![], vec![3, 1]).unwrap();
        let x1 = Variable::new(&r, x, vec![], vec![1]).unwrap();
        assert!(y21 < y31);
        assert!(y31 < x1, "schema declaration order dominates the structural order");
    }
}
