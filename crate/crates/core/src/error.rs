//! Error type shared across the crate.

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    /// The caller passed an argument outside the documented domain.
    #[error("usage: {0}")]
    Usage(String),

    /// A multiplication table failed one of the group axioms.
    #[error("invalid table ({axiom}): {detail}")]
    Validation { axiom: &'static str, detail: String },

    /// The operation is well formed but not defined for this input.
    #[error("domain: {0}")]
    Domain(String),

    /// A size cap would be exceeded; the message names the cap.
    #[error("resource limit: {0}")]
    Resource(String),

    #[error("io: {0}")]
    Io(#[from] std::io::Error),

    #[error("json: {0}")]
    Json(#[from] serde_json::Error),
}
