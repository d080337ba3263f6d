use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("domain error: {0}")]
    Domain(String),

    #[error("{0} is not a prime below 2^31")]
    NotPrime(u64),

    #[error("denominator {den} is not invertible modulo {p}")]
    DenominatorCollision { den: String, p: u32 },

    #[error("representation data mismatch: {0}")]
    Mismatch(String),

    #[error("unknown variable {0} in assignment")]
    UnknownVariable(String),

    #[error("weight mismatch substituting {var}: expected weight {expected}, image has {found}")]
    WeightMismatch { var: String, expected: u32, found: String },

    #[error("polynomial is not homogeneous")]
    Inhomogeneous,

    #[error("syntax error at offset {offset}: {message}")]
    Syntax { offset: usize, message: String },

    #[error("form is not unimodular: {0}")]
    NotUnimodular(String),

    #[error("invalid form: {0}")]
    InvalidForm(String),

    #[error("internal consistency error: {0}")]
    Internal(String),

    #[error("verification failed: {0}")]
    Verification(String),
}
