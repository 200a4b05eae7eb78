use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RingError {
    #[error("element index {index} out of range for ring of size {size}")]
    OutOfRange { index: usize, size: usize },

    /// `size` is the requested element count, saturated to `u128::MAX`.
    #[error("ring with {size} elements exceeds capacity {capacity}")]
    Capacity { size: u128, capacity: usize },

    #[error("malformed table: {0}")]
    Malformed(String),

    #[error("zero ring rejected: one equals zero")]
    ZeroRing,

    #[error("invalid construction parameter: {0}")]
    InvalidParameter(String),

    #[error("not a two-sided ideal: {0}")]
    NotIdeal(String),

    #[error("bimodule law violated: {0}")]
    BimoduleLaw(String),

    #[error("parse error at column {column}: {message}")]
    Parse { column: usize, message: String },

    #[error("cannot read {path}: {message}")]
    Io { path: String, message: String },
}

impl RingError {
    /// Short machine-readable category used by the CLI error prefix.
    pub fn kind(&self) -> &'static str {
        match self {
            RingError::OutOfRange { .. } => "range",
            RingError::Capacity { .. } => "capacity",
            RingError::Malformed(_) => "malformed",
            RingError::ZeroRing => "zero-ring",
            RingError::InvalidParameter(_) => "parameter",
            RingError::NotIdeal(_) => "ideal",
            RingError::BimoduleLaw(_) => "bimodule",
            RingError::Parse { .. } => "parse",
            RingError::Io { .. } => "io",
        }
    }
}

pub type Result<T, E = RingError> = std::result::Result<T, E>;
