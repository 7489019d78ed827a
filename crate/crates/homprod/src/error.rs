use thiserror::Error;

/// Errors shared across the crate.
#[derive(Debug, Error)]
pub enum Error {
    #[error("dimension mismatch: {0}")]
    Dimension(String),
    #[error("index out of range: {0}")]
    IndexRange(String),
    #[error("invalid twist specification: {0}")]
    Twist(String),
    #[error("group action rejected: {0}")]
    GroupAction(String),
    #[error("circulant sizes differ: {0} vs {1}")]
    CirculantSize(usize, usize),
    #[error("parameter out of range: {0}")]
    Parameter(String),
    #[error("size guard exceeded: {0}")]
    Guard(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("invalid construction: {0}")]
    Invalid(String),
}

pub type Result<T> = std::result::Result<T, Error>;
