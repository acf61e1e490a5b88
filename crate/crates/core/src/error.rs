use thiserror::Error;

use crate::action::IsotropyGroup;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("ragged matrix: row {row} has {found} entries, expected {expected}")]
    RaggedRows {
        row: usize,
        expected: usize,
        found: usize,
    },
    #[error("`{0}` is not an integer")]
    InvalidInteger(String),
    #[error("matrix has no columns")]
    NoColumns,
    #[error("malformed JSON matrix: {0}")]
    Json(String),
    #[error("{what} index {index} out of range (size {size})")]
    IndexOutOfRange {
        what: &'static str,
        index: usize,
        size: usize,
    },
    #[error("row operation needs two distinct rows, got row {0} twice")]
    SameRow(usize),
    #[error("unknown ground-set element e{}", .0 + 1)]
    UnknownLabel(usize),
    #[error("column subset is empty")]
    EmptySubset,
    #[error("{columns} columns exceed the supported maximum of {max}")]
    TooManyColumns { columns: usize, max: usize },
    #[error("ground set of {size} elements exceeds the limit of {limit}")]
    GroundSetTooLarge { size: usize, limit: usize },
    #[error("action is not effective (kernel {0})")]
    NotEffective(IsotropyGroup),
    #[error("matroid has rank zero")]
    RankZero,
    #[error("weight {index} is zero")]
    ZeroWeight { index: usize },
    #[error("expected a rank-one action with a single row, got {0} rows")]
    NotRankOne(usize),
    #[error("internal invariant violated: {0}")]
    Invariant(String),
}
