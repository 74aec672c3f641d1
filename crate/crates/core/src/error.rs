use thiserror::Error;

/// Errors shared across the crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Input outside the mathematical domain of a kernel function.
    #[error("domain error: {0}")]
    Domain(String),
    /// Structurally invalid argument (bad sizes, counts, probabilities).
    #[error("invalid argument: {0}")]
    Argument(String),
    /// Instance exceeds a hard size cap (e.g. exponential enumeration).
    #[error("instance too large: {0}")]
    Size(String),
    /// Malformed hypergraph text input.
    #[error("parse error on line {line}: {msg}")]
    Parse { line: usize, msg: String },
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn domain(msg: impl Into<String>) -> Error {
    Error::Domain(msg.into())
}

pub(crate) fn argument(msg: impl Into<String>) -> Error {
    Error::Argument(msg.into())
}
