//! Error type shared across the crate.

use thiserror::Error;

/// Errors produced by graph construction, formula evaluation, witness
/// building and the exact search oracle.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// A precondition on an argument was violated.
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    /// The graph text format could not be parsed. Line numbers are 1-based.
    #[error("parse error at line {line}: {message}")]
    Parse { line: usize, message: String },

    /// Requested a spanning-path family of `K_{a,b}` with `b >= a + 2`,
    /// where no spanning path exists.
    #[error("K_{{{a},{b}}} has no spanning path (parts differ by more than one)")]
    NoSpanningPath { a: usize, b: usize },

    /// The search budget was exhausted before an exact answer was proven.
    /// Never reported together with a truncated result.
    #[error("search budget exhausted after {nodes} units")]
    BudgetExhausted { nodes: u64 },

    /// The instance is outside the size range the exact oracle supports.
    #[error("instance too large for exact search: {0}")]
    TooLarge(String),

    /// An exhaustive search finished without reaching a family size the
    /// closed form guarantees. Indicates a bug or a false formula value.
    #[error("witness search exhausted all candidates below the target size {target}")]
    WitnessSearchFailed { target: usize },
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub(crate) fn invalid(msg: impl Into<String>) -> Self {
        Error::InvalidArgument(msg.into())
    }
}
