use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum WalkError {
    #[error("invalid input: {0}")]
    InvalidInput(String),

    /// The amplitude table cannot hold the next step.
    #[error("capacity exhausted: table spans positions -{capacity}..={capacity}, next step would reach {needed}")]
    CapacityExhausted { capacity: usize, needed: i64 },

    #[error("path-sum oracle refuses {requested} steps (limit {limit})")]
    TooManyPaths { requested: usize, limit: usize },

    /// Total probability drifted away from 1; always a kernel bug.
    #[error("norm drift {drift:e} exceeds {limit:e}")]
    NormDrift { drift: f64, limit: f64 },

    #[error("degenerate fit: {0}")]
    DegenerateFit(String),
}

pub type Result<T> = std::result::Result<T, WalkError>;
