use thiserror::Error;

/// Failures of the exact-algebra layer.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgError {
    #[error("zero generator rejected")]
    ZeroGenerator,
    #[error("ideal needs at least one generator")]
    EmptyIdeal,
    #[error("ring mismatch: {0}")]
    RingMismatch(String),
    #[error("budget exhausted: {0}")]
    BudgetExhausted(String),
    #[error("unsupported field: {0}")]
    UnsupportedField(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("unknown variable `{0}`")]
    UnknownVariable(String),
    #[error("invalid argument: {0}")]
    Invalid(String),
    #[error("input is not homogeneous")]
    NotHomogeneous,
    #[error("special fiber is everything: the distinguished variable lies in the ideal")]
    SpecialFiberEverything,
    #[error("ideal is not zero-dimensional")]
    NotZeroDimensional,
    #[error("precision insufficient: {0}")]
    Precision(String),
}

pub type Result<T> = std::result::Result<T, AlgError>;
