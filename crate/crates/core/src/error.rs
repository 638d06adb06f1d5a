use thiserror::Error;

/// Errors produced anywhere in the crate.
///
/// Every message names the precondition that was violated, so callers can
/// surface it verbatim as a one-line diagnostic.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),

    #[error("invalid word: {0}")]
    InvalidWord(String),

    #[error("invalid shape: {0}")]
    InvalidShape(String),

    #[error("invalid tableau: {0}")]
    InvalidTableau(String),

    /// An operation was called outside its domain.
    #[error("domain error: {0}")]
    Domain(String),

    /// An enumeration was asked to exceed its configured safety cap.
    #[error("limit exceeded: {0}")]
    LimitExceeded(String),
}

pub type Result<T> = std::result::Result<T, Error>;
