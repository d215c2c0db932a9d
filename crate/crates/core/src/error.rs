//! Error type shared by every module of the crate.

use thiserror::Error;

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum Error {
    /// Input could not be parsed; the message carries a field/position pointer.
    #[error("parse error: {0}")]
    Parse(String),

    /// Scalars from different fields were mixed in one computation.
    #[error("field mismatch: expected {expected}, found {found}")]
    FieldMismatch { expected: String, found: String },

    /// Table or vector dimensions do not agree.
    #[error("dimension error: {0}")]
    Dimension(String),

    /// A field specification is invalid (composite modulus, bad cyclotomic order, ...).
    #[error("invalid field: {0}")]
    InvalidField(String),

    /// Division by zero or inversion of a non-unit.
    #[error("division by zero")]
    DivisionByZero,

    /// The requested operation is not available in this configuration.
    #[error("unsupported: {0}")]
    Unsupported(String),

    /// Verified-data preconditions were violated or a computation produced
    /// structurally impossible output (signals bad input data).
    #[error("structural error: {0}")]
    Structural(String),

    /// An enumeration could not be completed; the result would be unreliable,
    /// so no partial answer is returned.
    #[error("inconclusive: {0}")]
    Inconclusive(String),

    /// A configurable step budget was exhausted.
    #[error("budget exceeded: {0}")]
    BudgetExceeded(String),

    /// Input exceeds the supported desk-scale limits.
    #[error("resource limit: {0}")]
    ResourceLimit(String),

    /// A degree-truncated workspace is too small for the requested computation.
    #[error("workspace overflow: degree {needed} required, workspace has {available}")]
    WorkspaceOverflow { needed: u32, available: u32 },
}

impl Error {
    pub fn parse(msg: impl Into<String>) -> Self {
        Error::Parse(msg.into())
    }

    pub fn dimension(msg: impl Into<String>) -> Self {
        Error::Dimension(msg.into())
    }

    pub fn structural(msg: impl Into<String>) -> Self {
        Error::Structural(msg.into())
    }
}
