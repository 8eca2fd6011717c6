//! Crate-wide error type.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    /// An argument violated a precondition (index out of range, malformed state, ...).
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    /// A model lookup failed because the model does not cover the queried entry.
    #[error("model incomplete: {0}")]
    ModelIncomplete(String),

    /// An operation requiring state enumeration was asked to run on a space
    /// that exceeds the enumeration cap.
    #[error("state space too large: {states} states exceeds cap of {cap}")]
    CapacityExceeded { states: u128, cap: u128 },

    /// Two structures or spaces with incompatible dimensions were combined.
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    /// A topology file failed to parse.
    #[error("topology parse error at line {line}: {msg}")]
    TopologyParse { line: usize, msg: String },

    /// A numeric-domain violation (non-positive Dirichlet count, prior
    /// constraint violation, ...).
    #[error("domain error: {0}")]
    Domain(String),

    /// Command-line usage error.
    #[error("usage error: {0}")]
    Usage(String),

    /// I/O failure, annotated with the path involved.
    #[error("i/o error on {path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub(crate) fn io(path: impl Into<String>, source: std::io::Error) -> Self {
        Error::Io {
            path: path.into(),
            source,
        }
    }
}
