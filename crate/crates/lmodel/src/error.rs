use thiserror::Error;

/// Failure of a single claim's computation.
#[derive(Debug, Error)]
pub enum CheckError {
    #[error(transparent)]
    Alg(#[from] exactalg::AlgError),
    #[error(transparent)]
    Chart(#[from] charts::ChartError),
    #[error(transparent)]
    Orbit(#[from] orbits::OrbitError),
    #[error(transparent)]
    Weyl(#[from] weyl::WeylError),
    #[error(transparent)]
    Spin(#[from] spin::SpinError),
}

impl CheckError {
    /// Whether the failure is a resource limit rather than a wrong answer.
    pub fn is_budget(&self) -> bool {
        use charts::ChartError;
        use exactalg::AlgError;
        use orbits::OrbitError;
        matches!(
            self,
            CheckError::Alg(AlgError::BudgetExhausted(_))
                | CheckError::Chart(ChartError::Alg(AlgError::BudgetExhausted(_)))
                | CheckError::Orbit(OrbitError::Alg(AlgError::BudgetExhausted(_)))
                | CheckError::Orbit(OrbitError::Chart(ChartError::Alg(AlgError::BudgetExhausted(_))))
        )
    }
}

/// Errors surfaced by the command-line layer.
#[derive(Debug, Error)]
pub enum CliError {
    #[error("usage: {0}")]
    Usage(String),
    #[error("{0}")]
    Check(#[from] CheckError),
    #[error("i/o: {0}")]
    Io(#[from] std::io::Error),
}

impl CliError {
    pub fn usage(msg: impl Into<String>) -> Self {
        CliError::Usage(msg.into())
    }
}
