use thiserror::Error;

use crate::ring::Ring;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("mixed ring instances: {0} and {1}")]
    MixedRings(Ring, Ring),

    #[error("division by zero")]
    DivisionByZero,

    #[error("{divisor} does not divide {dividend}")]
    NotDivisible { dividend: String, divisor: String },

    #[error("shape mismatch: {0}")]
    Shape(String),

    #[error("not a matrix factorization: {0}")]
    NotAFactorization(String),

    #[error("not a cocycle: {0}")]
    NotACocycle(String),

    #[error("the potential W must be non-zero")]
    ZeroPotential,

    #[error("{0} is not a unit")]
    NotAUnit(String),

    #[error("{0} is not prime")]
    NotPrime(String),

    #[error("index out of range: {0}")]
    Range(String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("parse error: {0}")]
    Parse(String),
}

impl Error {
    pub(crate) fn not_divisible(dividend: impl ToString, divisor: impl ToString) -> Self {
        Error::NotDivisible {
            dividend: dividend.to_string(),
            divisor: divisor.to_string(),
        }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
