use thiserror::Error;

/// Errors shared across the crate. Several of these double as identity
/// assertions: a `NonzeroRemainder` from a division that a theorem claims
/// is exact means the identity itself failed.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("exact division left a nonzero remainder")]
    NonzeroRemainder,
    #[error("series constant term is not +1 or -1")]
    NonUnitConstantTerm,
    #[error("polynomial has a negative exponent and cannot truncate to a power series")]
    NegativeExponent,
    #[error("q-binomial coefficient is not defined for n = {0} < 0")]
    UnsupportedIndex(i64),
    #[error("empty summation range: 2L + i < -L for L = {0}, i = {1}")]
    EmptyRange(i64, i64),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
