use crate::coeff::Guard;
use thiserror::Error;

/// Errors raised by the algebra kernel.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,

    /// A denominator vanished at a specialization point.
    #[error("guard violated: {0}")]
    Guard(Guard),

    #[error("value is not rational at this point: {0}")]
    NotRational(String),

    #[error("parse error at position {pos}: {msg}")]
    Parse { pos: usize, msg: String },

    #[error("dimension mismatch: {left} vs {right}")]
    DimensionMismatch { left: usize, right: usize },

    #[error("index {index} out of range 1..={max}")]
    IndexOutOfRange { index: usize, max: usize },

    #[error("operation requires n = {expected}, got n = {got}")]
    WrongN { expected: usize, got: usize },

    #[error("vector not in span: {0}")]
    NotInSpan(String),

    #[error("expected a scalar, got {0}")]
    NonScalar(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

impl Error {
    pub(crate) fn parse(pos: usize, msg: impl Into<String>) -> Self {
        Error::Parse { pos, msg: msg.into() }
    }
}
