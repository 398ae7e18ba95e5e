//! Shared input-validation error.

use thiserror::Error;

/// Invalid input to a library operation (mismatched lengths, bad ranges,
/// malformed data). Domain-specific failures get their own enums in the
/// module that produces them.
#[derive(Debug, Clone, Error, PartialEq, Eq)]
#[error("{msg}")]
pub struct InputError {
    msg: String,
}

impl InputError {
    pub fn new(msg: impl Into<String>) -> Self {
        InputError { msg: msg.into() }
    }
}
