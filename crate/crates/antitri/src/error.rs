use thiserror::Error;

/// Errors surfaced by the exact-arithmetic operations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("the zero polynomial has no root count")]
    ZeroPolynomial,
    #[error("matrix is singular (zero diagonal entry)")]
    SingularMatrix,
    #[error("matrix is not triangular")]
    NotTriangular,
    #[error("index out of range: {0}")]
    IndexOutOfRange(String),
    #[error("constraint violated: {0}")]
    ConstraintViolated(String),
    #[error("precondition violated: {0}")]
    PreconditionViolated(String),
    #[error("no positive extension of g at index {0}: the step denominator is nonpositive")]
    NoPositiveExtension(usize),
    #[error("too few tabulated values to classify (need at least 3)")]
    TooFewValues,
    #[error("weights are not normalizable as a probability distribution (requires alpha*t > 1)")]
    NotNormalizable,
    #[error("site distribution is not classified; spectral conditions need a classified family")]
    NotClassified,
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
