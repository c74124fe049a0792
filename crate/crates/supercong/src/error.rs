use thiserror::Error;

/// Crate-wide error type. Every fallible arithmetic or suite operation
/// reports one of these.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("p = 2 contexts are unsupported")]
    EvenPrimeUnsupported,
    #[error("p^k does not fit in 127 bits")]
    PrecisionOverflow,
    #[error("denominator is divisible by p")]
    DenominatorNotUnit,
    #[error("element is not a unit")]
    NonUnit,
    #[error("operands belong to different contexts")]
    ContextMismatch,
    #[error("argument out of range: {0}")]
    OutOfRange(String),
    #[error("precision too low (k >= 2 required)")]
    PrecisionTooLow,
    #[error("a denominator Pochhammer factor is not invertible (index {0})")]
    NonInvertibleDenominator(u64),
    #[error("invalid r for this family: {0}")]
    InvalidR(String),
    #[error("pole encountered: ({0})_{1} vanishes")]
    PoleEncountered(String, u32),
    #[error("unknown check id: {0}")]
    UnknownCheck(String),
    #[error("unknown consistency pair: {0}")]
    UnknownPair(String),
}

pub type Result<T> = std::result::Result<T, Error>;
