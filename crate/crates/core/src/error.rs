use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{0} is not a prime power")]
    NotPrimePower(u64),
    #[error("field order {0} exceeds the supported maximum of 65536")]
    FieldTooLarge(u64),
    #[error("division by zero")]
    DivisionByZero,
    #[error("invalid weights: {0}")]
    InvalidWeights(String),
    #[error("negative input {0}")]
    NegativeInput(i64),
    #[error("negative degree {0}")]
    NegativeDegree(i64),
    #[error("{0} weights given, at most 8 supported for permutation search")]
    TooManyWeights(usize),
    #[error("weight ordering does not satisfy the complete-intersection condition")]
    ConditionNotSatisfied,
    #[error("length mismatch: expected {expected}, got {found}")]
    LengthMismatch { expected: usize, found: usize },
    #[error("binomial with identical monomials")]
    ZeroBinomial,
    #[error("enumeration of {needed} items exceeds the guard limit {limit}")]
    TooLarge { needed: u128, limit: u64 },
    #[error("point has a zero coordinate")]
    ZeroCoordinate,
    #[error("weights {0} and {1} are not coprime")]
    NotCoprime(u64, u64),
    #[error("{0}")]
    OutOfRange(String),
    #[error("the code is zero")]
    ZeroCode,
    #[error("polynomial division leaves a remainder")]
    InexactDivision,
    #[error("arithmetic overflow")]
    Overflow,
    #[error("parse error: {0}")]
    Parse(String),
    #[error("{0}")]
    Config(String),
}
