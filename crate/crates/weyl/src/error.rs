use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum WeylError {
    #[error("n must be at least 3, got {0}")]
    RankTooSmall(usize),
    #[error("invalid signature (r, s) = ({r}, {s}) for n = {n}")]
    Signature { n: usize, r: usize, s: usize },
    #[error("invalid parahoric index set: {0}")]
    Parahoric(String),
    #[error("elements belong to different groups")]
    GroupMismatch,
    #[error("operation requires n even")]
    OddRank,
    #[error("figures are only drawn for rank at most 2 (n <= 5), got n = {0}")]
    RankTooLarge(usize),
    #[error("enumeration budget exhausted: {0}")]
    BudgetExhausted(String),
    #[error("{0}")]
    Invalid(String),
}

pub type Result<T> = std::result::Result<T, WeylError>;
