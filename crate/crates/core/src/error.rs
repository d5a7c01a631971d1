use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    /// An argument outside the operation's domain.
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    /// An iterative solver did not reach its tolerance.
    #[error("{what} did not converge after {iterations} iterations")]
    NoConvergence {
        what: &'static str,
        iterations: usize,
    },

    /// An eigenpair failed the residual check.
    #[error("eigenvalue {lambda} has residual {residual:e} above tolerance")]
    EigenResidual { lambda: String, residual: f64 },

    /// A truncated series cannot meet its tail bound at the requested length.
    #[error(
        "series tail bound {bound:e} exceeds tolerance at {terms} terms; try at least {suggested}"
    )]
    TailBound {
        terms: usize,
        bound: f64,
        suggested: usize,
    },

    #[error("fixture error: {0}")]
    Fixture(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

impl Error {
    pub(crate) fn invalid(msg: impl Into<String>) -> Self {
        Error::InvalidArgument(msg.into())
    }

    /// True for failures of the numerical machinery (as opposed to bad input).
    pub fn is_numeric(&self) -> bool {
        matches!(
            self,
            Error::NoConvergence { .. } | Error::EigenResidual { .. } | Error::TailBound { .. }
        )
    }
}
