use num_bigint::BigUint;
use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// A sequence term at the given 1-based index was zero or negative.
    #[error("term {0} is not a positive integer")]
    NonPositiveTerm(usize),

    #[error("index {index} is out of range for a sequence of length {len}")]
    IndexOutOfRange { index: usize, len: usize },

    #[error("value must be a positive integer")]
    NonPositive,

    /// Trial division would exceed the configured divisor ceiling.
    #[error("cofactor {cofactor} has no factor below the trial-division limit {limit}")]
    InputTooLarge { cofactor: BigUint, limit: u64 },

    #[error("{0} is not prime")]
    NotPrime(BigUint),

    #[error("component lengths differ: expected {expected}, found {found}")]
    LengthMismatch { expected: usize, found: usize },

    /// The requested weight is below the least admissible successor weight.
    #[error("weight is below the minimum admissible successor {0}")]
    BelowMinimum(u64),

    #[error("weights violate the exponent-sum condition at (n={n}, k={k})")]
    InadmissiblePath { n: usize, k: usize },

    #[error("sampling mean must be positive and finite")]
    InvalidMean,
}
