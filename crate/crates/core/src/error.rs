use thiserror::Error;

/// Crate-wide error type.
#[derive(Debug, Error)]
pub enum Error {
    /// Arithmetic mixed coefficients from different domains (rational vs
    /// prime field, or two different primes).
    #[error("coefficient domain mismatch: {0}")]
    DomainMismatch(String),

    #[error("invalid schema declaration: {0}")]
    InvalidSchema(String),

    #[error("invalid variable: {0}")]
    InvalidVariable(String),

    /// A witness was applied to a value whose support it does not cover.
    #[error("witness does not cover index {0}")]
    IncompleteWitness(u32),

    /// The pairs do not describe a restriction of a strictly increasing map
    /// on all of N.
    #[error("invalid witness: {0}")]
    InvalidWitness(String),

    #[error("leading term of the zero polynomial")]
    ZeroPolynomial,

    #[error("zero generator at position {0}")]
    ZeroGenerator(usize),

    #[error("tuple length mismatch: {0} vs {1}")]
    LengthMismatch(usize, usize),

    #[error("label {label} out of range for poset of size {size}")]
    LabelOutOfRange { label: usize, size: usize },

    #[error("invalid poset: {0}")]
    InvalidPoset(String),

    #[error("not an elimination order for the requested symbols: {0}")]
    NotEliminationOrder(String),

    #[error("element of width {width} exceeds truncation width {max}")]
    WidthExceeded { width: u32, max: u32 },

    #[error("ring mismatch: {0}")]
    RingMismatch(String),

    #[error("unknown symbol `{0}`")]
    UnknownSymbol(String),

    #[error("unknown order preset `{0}`")]
    UnknownOrderPreset(String),

    #[error("invalid input: {0}")]
    InvalidProblem(String),

    #[error("json: {0}")]
    Json(#[from] serde_json::Error),

    #[error("io: {0}")]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
