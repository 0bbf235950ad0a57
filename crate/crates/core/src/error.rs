use thiserror::Error;

/// Which density-matrix invariant a validation failed on.
#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Invariant {
    Shape,
    Finite,
    Hermiticity,
    Trace,
    PositiveSemidefinite,
    Normalization,
}

impl std::fmt::Display for Invariant {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let s = match self {
            Invariant::Shape => "shape",
            Invariant::Finite => "finite entries",
            Invariant::Hermiticity => "hermiticity",
            Invariant::Trace => "unit trace",
            Invariant::PositiveSemidefinite => "positive semidefiniteness",
            Invariant::Normalization => "normalization",
        };
        f.write_str(s)
    }
}

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    /// `value` is the offending quantity: the max hermiticity residual, the
    /// trace, the most negative eigenvalue, and so on.
    #[error("{invariant} violated: {value:e} (tolerance {tolerance:e})")]
    Validation {
        invariant: Invariant,
        value: f64,
        tolerance: f64,
    },

    #[error("matrix is not positive semidefinite: eigenvalue {0:e}")]
    NotPsd(f64),

    #[error("eigensolver did not converge after {0} sweeps")]
    NoConvergence(usize),

    #[error("state file: {0}")]
    Format(String),

    #[error(transparent)]
    Json(#[from] serde_json::Error),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

pub(crate) fn invalid<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::InvalidArgument(msg.into()))
}
