//! Crate-wide error type.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    /// Malformed input: rank mismatch, non-dominant vector, unsupported field
    /// size, bad flag combination.
    #[error("invalid input: {0}")]
    InvalidInput(String),

    /// An enumeration task hit its state-count ceiling. Never silent: the
    /// offending task is named so the caller can raise the budget or shrink
    /// the instance.
    #[error("enumeration budget exceeded for {task} (limit {limit})")]
    BudgetExceeded { task: String, limit: u64 },

    /// Interpolated data did not fit an integer polynomial of the expected
    /// degree, or a spare evaluation point fell off the curve. Signals a
    /// counting bug or a wrong degree bound.
    #[error("interpolation inconsistency: {0}")]
    Interpolation(String),

    /// Two independent computation routes disagreed.
    #[error("method disagreement: {0}")]
    MethodDisagreement(String),

    /// An internal invariant that the theory guarantees failed to hold.
    #[error("self-check failed: {0}")]
    SelfCheck(String),

    /// A persistent cache record conflicts with an existing one under the
    /// same key.
    #[error("cache conflict: {0}")]
    CacheConflict(String),

    #[error("io error: {0}")]
    Io(#[from] std::io::Error),

    #[error("serialization error: {0}")]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub fn invalid(msg: impl Into<String>) -> Self {
        Error::InvalidInput(msg.into())
    }
}
