use thiserror::Error;

/// Errors produced by every module of the crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("input must be positive, got 0")]
    Zero,
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("{value} exceeds the supported limit {limit}")]
    TooLarge { value: u64, limit: u64 },
    #[error("{z} is not invertible modulo {m}")]
    NotCoprime { z: u64, m: u64 },
    #[error("modulus must be at least 2, got {0}")]
    BadModulus(u64),
    #[error("{0} is not a Fermat prime")]
    NotFermatPrime(u64),
    #[error("twist z = {z} does not satisfy z^{m} = 1 (mod {n})")]
    InvalidTwist { m: u64, n: u64, z: u64 },
    #[error("group of order {order} exceeds the enumeration budget of {cap} elements")]
    BudgetExceeded { order: String, cap: u64 },
    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),
    #[error("element does not belong to the group")]
    NotAMember,
    #[error("hypothesis violated: {0}")]
    Hypothesis(String),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
