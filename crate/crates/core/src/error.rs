//! Error type shared by every module of the crate.

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("p must be an odd prime, got {0}")]
    NotOddPrime(u64),
    #[error("extension degree must lie in 1..=8, got {0}")]
    BadExtensionDegree(u32),
    #[error("field size p^k overflows the supported range")]
    FieldTooLarge,
    #[error("operands belong to different fields")]
    FieldMismatch,
    #[error("division by zero")]
    DivisionByZero,
    #[error("zero polynomial input")]
    ZeroPolynomial,
    #[error("division by the zero polynomial")]
    ZeroPolynomialDivision,
    #[error("polynomial degree {got} not supported here (expected {expected})")]
    BadDegree { expected: &'static str, got: i64 },
    #[error("polynomial is not separable")]
    Inseparable,
    #[error("{0} is not a root of the polynomial")]
    NotARoot(String),
    #[error("characteristic divides {0}; the operation is undefined")]
    CharacteristicDivides(u64),
    #[error("curve model must have genus {expected}, got {got}")]
    WrongGenus { expected: usize, got: usize },
    #[error("even-degree model: reduce to odd degree first")]
    EvenDegreeModel,
    #[error("enumeration size {0} exceeds the guard of 10^7")]
    SizeGuardExceeded(u64),
    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),
    #[error("group closure exceeds the order guard of 10^5")]
    GroupTooLarge,
    #[error("unknown builtin group name: {0}")]
    UnknownGroup(String),
    #[error("heart module requires an odd number of points, got {0}")]
    EvenPointCount(usize),
    #[error("unsupported parameter: {0}")]
    Unsupported(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("internal consistency failure: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
