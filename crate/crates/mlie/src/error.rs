use crate::field::FieldSpec;

/// Errors reported by constructors and fallible operations.
///
/// Mixed-spec scalar arithmetic is a programming error and panics instead;
/// everything that depends on user-supplied data returns `Error`.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("field spec mismatch: {0} vs {1}")]
    FieldMismatch(FieldSpec, FieldSpec),

    #[error("division by zero")]
    DivisionByZero,

    #[error("parse error: {0}")]
    Parse(String),

    #[error("invalid {what}: {msg}")]
    Invalid { what: &'static str, msg: String },

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error("malformed document: {0}")]
    Json(#[from] serde_json::Error),
}

impl Error {
    pub(crate) fn invalid(what: &'static str, msg: impl Into<String>) -> Self {
        Error::Invalid { what, msg: msg.into() }
    }

    pub(crate) fn precondition(msg: impl Into<String>) -> Self {
        Error::Precondition(msg.into())
    }
}
