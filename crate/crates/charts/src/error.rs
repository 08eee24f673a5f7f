use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ChartError {
    #[error("invalid chart spec: {0}")]
    Spec(String),
    #[error("parity violation: {0}")]
    Parity(String),
    #[error("invalid lift subset {0:?}: {1}")]
    Subset(Vec<usize>, String),
    #[error("lattice chain outside the standard apartment: {0}")]
    NotDiagonal(String),
    #[error("precision insufficient: {0}")]
    Precision(String),
    #[error(transparent)]
    Alg(#[from] exactalg::AlgError),
    #[error(transparent)]
    Spin(#[from] spin::SpinError),
    #[error(transparent)]
    Weyl(#[from] weyl::WeylError),
}

pub type Result<T> = std::result::Result<T, ChartError>;
