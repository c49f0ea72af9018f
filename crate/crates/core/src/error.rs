use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid context: {0}")]
    InvalidContext(String),

    #[error("dimension mismatch: expected {expected} coordinates, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("invalid partition {0:?}: parts must be non-negative and weakly decreasing")]
    InvalidPartition(Vec<i64>),

    #[error("expected {expected} components, got {got}")]
    ComponentCount { expected: usize, got: usize },

    #[error("invalid lifts {0:?}: expected a nondecreasing sequence in [0, ell)")]
    InvalidLifts(Vec<i64>),

    #[error("dominance reduction needs positive level, got {0}")]
    NonPositiveLevel(i64),

    #[error("dominance reduction did not terminate after {0} reflections")]
    IterationCap(usize),

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
