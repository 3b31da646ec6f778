use std::time::Duration;

use thiserror::Error;

/// Errors raised anywhere in the library.
#[derive(Debug, Error)]
pub enum Error {
    /// A caller passed something outside an operation's domain.
    #[error("invalid argument: {0}")]
    Argument(String),

    /// A structure failed one of its invariants (group table, witness, automorphism, ...).
    #[error("validation failed: {0}")]
    Validation(String),

    /// A construction's hypothesis does not hold for the supplied witness.
    #[error("precondition `{clause}` violated: {detail}")]
    Precondition { clause: &'static str, detail: String },

    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },

    /// A size or count limit was exceeded.
    #[error("resource limit exceeded: {0}")]
    Resource(String),

    #[error("search timed out after {elapsed:?} ({nodes} nodes explored)")]
    Timeout { elapsed: Duration, nodes: u64 },

    #[error("not found: {0}")]
    NotFound(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl Error {
    pub(crate) fn precondition(clause: &'static str, detail: impl Into<String>) -> Self {
        Error::Precondition {
            clause,
            detail: detail.into(),
        }
    }

    pub(crate) fn parse(line: usize, column: usize, message: impl Into<String>) -> Self {
        Error::Parse {
            line,
            column,
            message: message.into(),
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
