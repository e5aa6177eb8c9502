use thiserror::Error;

use crate::exactalg::Rational;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// An exact division left a nonzero remainder.
    #[error("polynomial division is not exact (remainder {remainder})")]
    NonDivisible { remainder: String },
    #[error("division by the zero polynomial")]
    DivisionByZero,
    #[error("series has constant term {found}, expected {expected}")]
    BadConstantTerm { expected: &'static str, found: String },
    #[error("exponent {exponent:?} lies outside the truncation bounds {bounds:?}")]
    OutOfBounds { exponent: Vec<u32>, bounds: Vec<u32> },
    #[error("cannot pad {partition} to size {n}: need n >= {needed}")]
    TooSmall { partition: String, n: i64, needed: i64 },
    #[error("{what} = {value} exceeds the configured limit {limit}")]
    LimitExceeded { what: &'static str, value: u64, limit: u64 },
    #[error("size mismatch: {0}")]
    SizeMismatch(String),
    #[error("internal mismatch between independent routes: {0}")]
    InternalMismatch(String),
    #[error("polynomial is not integer-valued: binomial coefficient {index} is {coeff}")]
    NotIntegerValued { index: usize, coeff: Rational },
    #[error("parse error: {0}")]
    Parse(String),
}
