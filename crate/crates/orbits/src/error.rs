use charts::ChartError;
use exactalg::AlgError;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum OrbitError {
    #[error("invalid partition: {0}")]
    Partition(String),
    #[error("partitions of different sizes: {0} and {1}")]
    SizeMismatch(usize, usize),
    #[error("parity violation: {0}")]
    Parity(String),
    #[error(transparent)]
    Chart(#[from] ChartError),
    #[error(transparent)]
    Alg(#[from] AlgError),
}

pub type Result<T> = std::result::Result<T, OrbitError>;
