use thiserror::Error;

use crate::domain::Ring;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("ring mismatch: {0} vs {1}")]
    RingMismatch(Ring, Ring),
    #[error("division by zero")]
    DivisionByZero,
    #[error("argument must be nonzero")]
    ZeroArgument,
    #[error("arguments must not both be zero")]
    ZeroArguments,
    #[error("modulus must be nonzero")]
    ZeroModulus,
    #[error("cannot split {0} into irreducible factors over Q")]
    FactorizationIncomplete(String),
    #[error("size mismatch: {0} vs {1}")]
    SizeMismatch(usize, usize),
    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),
    #[error("index {index} out of range 1..={bound}")]
    IndexOutOfRange { index: usize, bound: usize },
    #[error("selection leaves an empty matrix")]
    EmptyResult,
    #[error("bad index sets: {0}")]
    BadIndexSets(String),
    #[error("matrix is not square ({0}x{1})")]
    NotSquare(usize, usize),
    #[error("input too large for the brute-force oracle: {0}")]
    TooLargeForOracle(String),
    #[error("matrix is singular")]
    SingularMatrix,
    #[error("{0} is not a unit")]
    NotAUnit(String),
    #[error("no nonzero entry in the selected column")]
    AllZeroColumn,
    #[error("rank {rank} too small for {needed} powers of one prime")]
    RankTooSmall { rank: usize, needed: usize },
    #[error("polynomial {0} is not monic")]
    NotMonic(String),
    #[error("elementary divisor {0} is not a power of a linear factor over Q")]
    NonLinearElementaryDivisor(String),
    #[error("operation not supported over {0}")]
    UnsupportedRing(Ring),
    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),
    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("certificate check failed: {0}")]
    Verification(String),
}

impl Error {
    pub(crate) fn parse(line: usize, column: usize, message: impl Into<String>) -> Self {
        Error::Parse {
            line,
            column,
            message: message.into(),
        }
    }
}
