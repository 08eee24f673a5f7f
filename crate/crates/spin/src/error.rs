use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SpinError {
    #[error("gram matrix is singular")]
    SingularGram,
    #[error("gram matrix must be square of even size 2n, got {0}")]
    GramShape(usize),
    #[error("subspace is not totally isotropic")]
    NotIsotropic,
    #[error("invalid wedge index {0:?} for n = {1}")]
    BadIndex(Vec<usize>, usize),
    #[error("dimension mismatch: {0}")]
    Dimension(String),
    #[error("invalid lattice: {0}")]
    Lattice(String),
    #[error(transparent)]
    Alg(#[from] exactalg::AlgError),
}

pub type Result<T> = std::result::Result<T, SpinError>;
