use thiserror::Error;

/// Two vectors of different lengths were compared.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
#[error("dimension mismatch: {left} vs {right}")]
pub struct DimensionMismatch {
    pub left: usize,
    pub right: usize,
}

/// Rejected instance construction.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum InstanceError {
    #[error("instance has no rows")]
    Empty,
    #[error("dimension must be at least 1")]
    ZeroDimension,
    #[error("cluster budget k must be at least 1")]
    ZeroBudget,
    #[error("row {row} has length {found}, expected {expected}")]
    RowLength { row: usize, expected: usize, found: usize },
}

/// An index-based argument referred to a row or coordinate that does not exist.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
#[error("{what} index {index} out of range (limit {limit})")]
pub struct IndexOutOfRange {
    pub what: &'static str,
    pub index: usize,
    pub limit: usize,
}
