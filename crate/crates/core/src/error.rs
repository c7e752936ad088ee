use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("continued fraction has a zero tail at term {index}")]
    ZeroTail { index: usize },

    #[error("continued fraction evaluates to zero")]
    ZeroSlope,

    #[error("continued fraction must have at least one term")]
    EmptyTerms,

    #[error("continued fraction term {index} is zero")]
    ZeroTerm { index: usize },

    #[error("integer overflow while {0}")]
    Overflow(&'static str),

    #[error("{0}")]
    Domain(String),

    #[error("{value} is not invertible modulo {modulus}")]
    NotInvertible { value: i64, modulus: i64 },

    #[error("invalid Conway sequence: {0}")]
    InvalidSequence(String),

    #[error("invalid DT code: {0}")]
    InvalidDtCode(String),

    #[error("malformed diagram for {sequence}: {reason}")]
    MalformedDiagram { sequence: String, reason: String },

    #[error("invariant violated for {sequence}: {reason}")]
    Invariant { sequence: String, reason: String },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
