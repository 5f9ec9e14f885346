use serde::{Deserialize, Serialize};

use crate::algebra::{Coeff, Field, IndexConstraint, Monomial, Polynomial, Ring, SymbolSchema, Variable};
use crate::engine::EngineConfig;
use crate::error::{Error, Result};
use crate::order::{Grading, OrderSpec};
use crate::wpo::{LabelledTree, PosetTable};

/// The on-disk problem description: ring, field, order, generators, and
/// engine budgets. Polynomials are plain term lists, never expressions.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ProblemFile {
    pub ring: Vec<SchemaDecl>,
    #[serde(default)]
    pub field: FieldDecl,
    #[serde(default)]
    pub order: OrderDecl,
    #[serde(default)]
    pub generators: Vec<PolyDecl>,
    #[serde(default)]
    pub config: ConfigDecl,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SchemaDecl {
    pub name: String,
    /// Bounds of the fixed indices, e.g. `[2]` for rows `i` in `[2]`.
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub fixed: Vec<u32>,
    /// Number of N-indices.
    #[serde(default)]
    pub free: usize,
    #[serde(default, skip_serializing_if = "ConstraintDecl::is_none")]
    pub constraint: ConstraintDecl,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ConstraintDecl {
    #[default]
    None,
    StrictlyDecreasing,
    PairwiseDistinct,
}

impl ConstraintDecl {
    fn is_none(&self) -> bool {
        *self == ConstraintDecl::None
    }

    fn to_core(self) -> IndexConstraint {
        match self {
            ConstraintDecl::None => IndexConstraint::None,
            ConstraintDecl::StrictlyDecreasing => IndexConstraint::StrictlyDecreasing,
            ConstraintDecl::PairwiseDistinct => IndexConstraint::PairwiseDistinct,
        }
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "lowercase")]
pub enum FieldDecl {
    #[default]
    Rational,
    Prime {
        p: u64,
    },
}

impl FieldDecl {
    pub fn to_core(self) -> Result<Field> {
        let f = match self {
            FieldDecl::Rational => Field::Rational,
            FieldDecl::Prime { p } => Field::Prime(p),
        };
        f.validate()?;
        Ok(f)
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum OrderDecl {
    /// `"rowlex"` (declaration-order ungraded lex) or `"elim-onefactor"`
    /// (symbols `y` before `x`, ungraded lex).
    Preset(String),
    Explicit {
        precedence: Vec<String>,
        #[serde(default)]
        grading: GradingDecl,
    },
}

impl Default for OrderDecl {
    fn default() -> Self {
        OrderDecl::Preset("rowlex".into())
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum GradingDecl {
    #[default]
    None,
    TotalDegreeFirst,
}

pub type PolyDecl = Vec<TermDecl>;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TermDecl {
    /// Integer or fraction, e.g. `"1"`, `"-3/2"`.
    pub coeff: String,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub factors: Vec<FactorDecl>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FactorDecl {
    pub symbol: String,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub fixed: Vec<u32>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub free: Vec<u32>,
    #[serde(default = "default_exp")]
    pub exp: u32,
}

fn default_exp() -> u32 {
    1
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ConfigDecl {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub max_steps: Option<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub max_width: Option<u32>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub max_degree: Option<u32>,
    #[serde(default = "default_true")]
    pub use_product_criterion: bool,
}

impl Default for ConfigDecl {
    fn default() -> Self {
        ConfigDecl {
            max_steps: None,
            max_width: None,
            max_degree: None,
            use_product_criterion: true,
        }
    }
}

fn default_true() -> bool {
    true
}

/// A fully resolved problem, ready for the engine.
pub struct Resolved {
    pub ring: Ring,
    pub order: OrderSpec,
    pub generators: Vec<Polynomial>,
    pub config: EngineConfig,
}

impl ProblemFile {
    pub fn parse(json: &str) -> Result<ProblemFile> {
        serde_json::from_str(json).map_err(Error::from)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("serializable")
    }

    pub fn resolve(&self) -> Result<Resolved> {
        let field = self.field.to_core()?;
        let schemas = self
            .ring
            .iter()
            .map(|d| SymbolSchema::new(d.name.clone(), d.fixed.clone(), d.free, d.constraint.to_core()))
            .collect::<Result<Vec<_>>>()?;
        let ring = Ring::new(schemas, field)?;
        let order = resolve_order(&ring, &self.order)?;
        let generators = self
            .generators
            .iter()
            .enumerate()
            .map(|(i, p)| {
                resolve_poly(&ring, p).map_err(|e| {
                    Error::InvalidProblem(format!("generator {}: {e}", i + 1))
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Resolved {
            ring,
            order,
            generators,
            config: EngineConfig {
                max_steps: self.config.max_steps,
                max_width: self.config.max_width,
                max_degree: self.config.max_degree,
                use_product_criterion: self.config.use_product_criterion,
            },
        })
    }
}

pub(crate) fn resolve_order(ring: &Ring, decl: &OrderDecl) -> Result<OrderSpec> {
    match decl {
        OrderDecl::Preset(name) => match name.as_str() {
            "rowlex" => Ok(OrderSpec::declaration_lex(ring)),
            "elim-onefactor" => {
                let y = ring.schema_by_name("y").map_err(|_| {
                    Error::InvalidProblem(
                        "preset elim-onefactor expects a symbol named `y`".into(),
                    )
                })?;
                let x = ring.schema_by_name("x").map_err(|_| {
                    Error::InvalidProblem(
                        "preset elim-onefactor expects a symbol named `x`".into(),
                    )
                })?;
                let mut precedence = vec![y, x];
                for (i, _) in ring.schemas().iter().enumerate() {
                    let id = crate::algebra::SchemaId(i);
                    if id != y && id != x {
                        precedence.push(id);
                    }
                }
                OrderSpec::new(ring, precedence, Grading::None)
            }
            other => Err(Error::UnknownOrderPreset(other.to_string())),
        },
        OrderDecl::Explicit { precedence, grading } => {
            let ids = precedence
                .iter()
                .map(|n| ring.schema_by_name(n))
                .collect::<Result<Vec<_>>>()?;
            let grading = match grading {
                GradingDecl::None => Grading::None,
                GradingDecl::TotalDegreeFirst => Grading::TotalDegreeFirst,
            };
            OrderSpec::new(ring, ids, grading)
        }
    }
}

pub(crate) fn resolve_poly(ring: &Ring, decl: &PolyDecl) -> Result<Polynomial> {
    let field = ring.field();
    let mut terms: Vec<(Monomial, Coeff)> = Vec::with_capacity(decl.len());
    for (ti, term) in decl.iter().enumerate() {
        let coeff = field
            .parse(&term.coeff)
            .map_err(|e| Error::InvalidProblem(format!("term {}: {e}", ti + 1)))?;
        let mut factors = Vec::with_capacity(term.factors.len());
        for f in &term.factors {
            let schema = ring.schema_by_name(&f.symbol).map_err(|e| {
                Error::InvalidProblem(format!("term {}: {e}", ti + 1))
            })?;
            let var = Variable::new(ring, schema, f.fixed.clone(), f.free.clone())
                .map_err(|e| Error::InvalidProblem(format!("term {}: {e}", ti + 1)))?;
            factors.push((var, f.exp));
        }
        terms.push((Monomial::from_factors(factors), coeff));
    }
    Polynomial::from_terms(terms)
}

/// Subject file for the `wpo` subcommand.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "relation", rename_all = "lowercase")]
pub enum WpoFile {
    Dickson { a: Vec<u64>, b: Vec<u64> },
    Multiset { poset: PosetDecl, a: Vec<usize>, b: Vec<usize> },
    Higman { poset: PosetDecl, a: Vec<usize>, b: Vec<usize> },
    Kruskal { poset: PosetDecl, a: LabelledTree, b: LabelledTree },
}

/// Poset description: a chain, an antichain, or generating pairs whose
/// reflexive-transitive closure is taken. Labels are 0-based.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum PosetDecl {
    Chain { chain: usize },
    Antichain { antichain: usize },
    Table {
        size: usize,
        #[serde(default)]
        leq_pairs: Vec<(usize, usize)>,
    },
}

impl PosetDecl {
    pub fn to_core(&self) -> Result<PosetTable> {
        match self {
            PosetDecl::Chain { chain } => Ok(PosetTable::chain(*chain)),
            PosetDecl::Antichain { antichain } => Ok(PosetTable::antichain(*antichain)),
            PosetDecl::Table { size, leq_pairs } => PosetTable::from_pairs(*size, leq_pairs),
        }
    }
}
