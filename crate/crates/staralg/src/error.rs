//! Crate-wide error type.

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero in Q(l)")]
    DivisionByZero,

    #[error("evaluation at a pole of the coefficient")]
    EvaluationAtPole,

    #[error("the zero element has no order of vanishing")]
    ZeroHasNoPoleOrder,

    #[error("operands live in different phase spaces (m = {left} vs m = {right})")]
    DimensionMismatch { left: usize, right: usize },

    #[error("unknown variable `{0}` for this phase space")]
    UnknownVariable(String),

    #[error("multiplicity n must be at least 1")]
    InvalidMultiplicity,

    #[error("polynomial degree {degree} exceeds the slice bound {bound}")]
    DegreeExceedsSlice { degree: u32, bound: u32 },

    #[error("operand is not in the normalizer: left product by the generator does not land in the ideal")]
    NotInNormalizer,

    #[error("component degree {degree} exceeds {bound}; the operand violates normalizer membership")]
    DegreeOverflow { degree: u32, bound: u32 },

    #[error("the matrix identification degenerates at l = 0; evaluation requires l != 0")]
    LambdaZero,

    #[error("internal consistency check failed: {0}")]
    Inconsistent(String),

    #[error("syntax error at position {position}: {message}")]
    Parse { position: usize, message: String },

    #[error("invalid job: {0}")]
    InvalidJob(String),
}

pub type Result<T> = std::result::Result<T, Error>;
