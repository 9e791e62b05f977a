use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    /// A degree (or other size) exceeds a configured cap.
    #[error("{what} {requested} exceeds the cap of {cap}")]
    Capacity {
        what: &'static str,
        requested: usize,
        cap: usize,
    },

    #[error("invalid argument: {0}")]
    Argument(String),

    /// The requested statistic needs a sample of at least its degree.
    #[error("degree exceeds sample size (degree {degree}, sample size {size})")]
    DegreeExceedsSampleSize { degree: usize, size: usize },

    #[error("class function is not invertible in the class algebra of degree {degree}")]
    NotInvertible { degree: usize },

    #[error("eigensolver did not converge after {sweeps} sweeps")]
    NoConvergence { sweeps: usize },

    #[error("parse error at line {line}, token {token}: {message}")]
    Parse {
        line: usize,
        token: usize,
        message: String,
    },

    #[error("unknown identity `{0}`")]
    UnknownIdentity(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

impl Error {
    pub(crate) fn argument(msg: impl Into<String>) -> Self {
        Error::Argument(msg.into())
    }
}
