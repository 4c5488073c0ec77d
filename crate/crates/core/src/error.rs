use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("row {row} has length {found}, expected {expected}")]
    DimensionMismatch { row: usize, expected: usize, found: usize },

    #[error("dimension must be positive")]
    ZeroDimension,

    #[error("{0}: empty point set")]
    Empty(&'static str),

    #[error("{what} requires dimension at least {required}, got {found}")]
    DimensionTooSmall { what: &'static str, required: usize, found: usize },

    #[error("invalid index set: {0}")]
    InvalidIndices(String),

    #[error("operation `{op}` takes {expected} arguments, got {found}")]
    ArityMismatch { op: String, expected: usize, found: usize },

    #[error("enumeration of {needed} candidates exceeds the budget of {budget}")]
    BudgetExceeded { needed: String, budget: u64 },

    #[error("operation `{op}` produced {point}, outside the bounding box; termination cannot be certified")]
    Unbounded { op: String, point: String },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}
