use thiserror::Error;

use crate::expr::ParseError;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("incompatible rings: {left} vs {right}")]
    IncompatibleRings { left: String, right: String },

    #[error("point has {got} coordinates, ring has {expected} variables")]
    LengthMismatch { expected: usize, got: usize },

    #[error("division by zero")]
    DivisionByZero,

    #[error("gcd of two zero polynomials is undefined")]
    ZeroGcd,

    #[error("not a polynomial: denominator {0} does not cancel")]
    NotAPolynomial(String),

    #[error("not symmetric: polynomial changes under the transposition ({0} {1})")]
    NotSymmetric(usize, usize),

    #[error("variable index {index} out of range for a ring with {vars} variables")]
    IndexOutOfRange { index: usize, vars: usize },

    #[error(transparent)]
    Parse(#[from] ParseError),

    /// A caller-supplied value violates an operation's precondition.
    #[error("{0}")]
    Precondition(String),

    /// Something that cannot happen for valid input did happen.
    #[error("internal invariant violated: {0}")]
    Invariant(String),
}

impl Error {
    pub(crate) fn precondition(msg: impl Into<String>) -> Self {
        Error::Precondition(msg.into())
    }

    pub(crate) fn invariant(msg: impl Into<String>) -> Self {
        Error::Invariant(msg.into())
    }
}
