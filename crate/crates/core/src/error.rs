use thiserror::Error;

/// Errors shared by every operation in the crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// The caller handed us something outside an operation's domain.
    #[error("invalid input: {0}")]
    Input(String),
    /// A text file could not be parsed.
    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },
    /// A desk-scale cap (vertex count, ambient size, lattice size) was exceeded.
    #[error("resource limit exceeded: {0}")]
    Resource(String),
    /// Two independent computations of the same quantity disagreed.
    #[error("internal consistency failure: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn input<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::Input(msg.into()))
}
