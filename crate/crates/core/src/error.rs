use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid partition: {0}")]
    InvalidPartition(String),
    #[error("base size mismatch: {0} vs {1}")]
    SizeMismatch(usize, usize),
    #[error("partitions are not H-related")]
    NotHRelated,
    #[error("zero element is not part of the infinite monoid")]
    ZeroOperand,
    #[error("column {column} exceeds d = {d}")]
    ColumnOutOfRange { column: usize, d: usize },
    #[error("{what}: {size} exceeds cap {cap}")]
    CapExceeded { what: &'static str, size: u128, cap: u128 },
    #[error("invalid input: {0}")]
    Invalid(String),
}

pub type Result<T> = std::result::Result<T, Error>;
