//! Crate-wide error type.

/// Errors produced by board construction, solving, and file handling.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    /// Operation not defined for this board (e.g. core stratification
    /// needs side length at least 4).
    #[error("unsupported board: {0}")]
    UnsupportedBoard(String),

    /// A configured time, node, or memory budget was exceeded.
    /// `bounds` carries the best proven (lower, upper) interval, when one
    /// is known.
    #[error("resource limit: {message}")]
    ResourceLimit {
        message: String,
        bounds: Option<(usize, usize)>,
    },

    #[error("parse error: {0}")]
    Parse(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub fn invalid(msg: impl Into<String>) -> Self {
        Error::InvalidArgument(msg.into())
    }

    pub fn unsupported(msg: impl Into<String>) -> Self {
        Error::UnsupportedBoard(msg.into())
    }
}
