use thiserror::Error;

/// Failures of the combinatorial routines.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid segment [{begin},{end}]: begin exceeds end")]
    InvalidSegment { begin: i64, end: i64 },

    #[error("segments [{0},{1}] and [{2},{3}] are not linked")]
    NotLinked(i64, i64, i64, i64),

    #[error("segment [{begin},{end}] has length >= k = {k}")]
    TooLong { begin: i64, end: i64, k: u32 },

    #[error("{0}")]
    OutOfRange(String),

    #[error("column {0:?} is not fundamental")]
    NotFundamental(Vec<u32>),

    #[error("tableau is not semistandard: {0}")]
    NotSemistandard(String),

    #[error("tableaux differ in shape or context: {0}")]
    ShapeMismatch(String),

    #[error("not a factor")]
    NotAFactor,

    #[error("multisegment is not a ladder")]
    NotLadder,

    #[error("parity violation: Y_({i},{s}) needs i + s odd")]
    Parity { i: i64, s: i64 },

    #[error("invalid permutation {0:?}")]
    InvalidPermutation(Vec<u8>),

    #[error("permutations of different sizes ({0} vs {1})")]
    SizeMismatch(usize, usize),

    #[error("instance exceeds the budget: {0}")]
    OverBudget(String),
}

pub type Result<T> = std::result::Result<T, Error>;
