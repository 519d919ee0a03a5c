use thiserror::Error;

/// Errors raised by the combinatorial and algebraic operations.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid partition: {0}")]
    InvalidPartition(String),
    #[error("invalid tableau: {0}")]
    InvalidTableau(String),
    #[error("invalid signed permutation: {0}")]
    InvalidPermutation(String),
    #[error("size mismatch: {0} vs {1}")]
    SizeMismatch(usize, usize),
    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),
    #[error("rank mismatch: expected {expected}, found {found}")]
    RankMismatch { expected: usize, found: usize },
    #[error("not a cycle of the tableau: {0}")]
    NotACycle(String),
    #[error("cycle is not movable: {0}")]
    UnmovableCycle(String),
    #[error("invalid weight: a and b must be positive (got a={a}, b={b})")]
    InvalidWeight { a: u32, b: u32 },
    #[error("resource bound exceeded: {0}")]
    ResourceBound(String),
    #[error("not a left cell: {0}")]
    NotACell(String),
    #[error("inconsistent character data: {0}")]
    Character(String),
    #[error("cache error: {0}")]
    Cache(String),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
