use thiserror::Error;

/// Crate-wide error type.
///
/// The variants map onto the CLI exit-code contract: `Parse`, `Validation`,
/// `Domain` and `Capacity` are input/capacity errors (exit 2), while `Logic`
/// signals a violated internal assertion and is never silently swallowed.
#[derive(Debug, Error)]
pub enum Error {
    #[error("parse error on line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("invalid graph: {0}")]
    Validation(String),

    #[error("domain error: {0}")]
    Domain(String),

    #[error("capacity exceeded: {0}")]
    Capacity(String),

    #[error("internal invariant violated: {0}")]
    Logic(String),
}

impl Error {
    pub fn is_input_or_capacity(&self) -> bool {
        !matches!(self, Error::Logic(_))
    }
}

pub type Result<T> = std::result::Result<T, Error>;
