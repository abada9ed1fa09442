use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{0} is not prime")]
    NotPrime(u64),

    #[error("q = {0} is not a prime power")]
    NotPrimePower(u64),

    #[error("m = {0} must be even")]
    OddM(u32),

    #[error("m = {0} must be at least 2")]
    MTooSmall(u32),

    #[error("capacity exceeded: {what} = {value} exceeds the limit {limit}")]
    CapacityExceeded {
        what: &'static str,
        value: u128,
        limit: u128,
    },

    #[error("a field of order {small} is not a subfield of a field of order {big}")]
    NotASubfield { small: u64, big: u64 },

    #[error("modulus polynomial is not primitive over F_{p}")]
    NotPrimitive { p: u32 },

    #[error("polynomial division by the zero polynomial")]
    DivisorZero,

    #[error("operands belong to different fields")]
    MixedFields,

    #[error("{what} = {value} is out of range [{min}, {max}]")]
    OutOfRange {
        what: &'static str,
        value: u64,
        min: u64,
        max: u64,
    },

    #[error("design distance {delta} is out of range [{min}, {max}]")]
    DeltaOutOfRange { delta: u64, min: u64, max: u64 },

    #[error("internal error: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
