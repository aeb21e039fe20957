use thiserror::Error;

/// Failure modes of the evaluation and verification routines.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// An argument lies outside the domain of the requested function.
    #[error("domain error: {0}")]
    Domain(String),

    /// Adaptive quadrature exhausted its subdivision budget.
    #[error("quadrature did not reach tolerance {tol:e} within {panels} panels")]
    Convergence { tol: f64, panels: usize },

    /// Unknown envelope identifier.
    #[error("unknown envelope `{0}`")]
    Lookup(String),

    /// A gap-function sign pattern that admits no valid classification.
    #[error("unexpected sign structure: {0}")]
    Structure(String),

    /// Parameters outside the regime the operation is defined for.
    #[error("parameters outside regime: {0}")]
    Regime(String),

    /// A witness scan finished without finding a violation.
    #[error("no violation found: {0}")]
    Search(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn domain<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::Domain(msg.into()))
}
