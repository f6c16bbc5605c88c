use num_bigint::BigUint;
use thiserror::Error;

/// Errors shared across the toolkit.
#[derive(Debug, Error)]
pub enum Error {
    /// An argument violated a precondition (modulus below 2, even Proth k, ...).
    #[error("domain error: {0}")]
    Domain(String),

    /// The operand is larger than the configured bit budget. The operation is
    /// refused outright rather than silently truncated.
    #[error("resource refusal: operand needs {needed} bits but the budget is {budget} bits")]
    Resource { needed: u64, budget: u64 },

    /// Factorization gave up; the unfactored cofactor is returned so the
    /// caller can decide what to do with it.
    #[error("factorization effort exhausted, unfactored cofactor {cofactor}")]
    EffortExhausted { cofactor: BigUint },

    /// A database record or checksum failed re-verification.
    #[error("verification failure: {0}")]
    Verification(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }
}
