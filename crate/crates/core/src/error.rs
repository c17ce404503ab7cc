use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid dimension: {0}")]
    InvalidDimension(String),

    #[error("invalid input: {0}")]
    InvalidInput(String),

    /// The Hermitian matrix γ + iJ has a negative eigenvalue.
    #[error("covariance matrix violates γ + iJ ≥ 0 (minimum eigenvalue {min_eigenvalue:.3e})")]
    NotPhysical { min_eigenvalue: f64 },

    #[error("mode index {index} out of range for a {modes}-mode state")]
    ModeOutOfRange { index: usize, modes: usize },

    #[error("state is not pure (max |−JγJγ − 1| = {deviation:.3e})")]
    NotPure { deviation: f64 },

    #[error("inconsistent state: {0}")]
    Inconsistent(String),

    #[error("two-mode state is separable; quantity is defined for entangled states only")]
    Separable,

    #[error("evaluation failed: {0}")]
    Evaluation(String),

    #[error("parse error at {location}: {message}")]
    Parse { location: String, message: String },

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl Error {
    pub(crate) fn parse(location: impl Into<String>, message: impl Into<String>) -> Self {
        Error::Parse {
            location: location.into(),
            message: message.into(),
        }
    }
}
