use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("polynomials live in different variable contexts")]
    ContextMismatch,

    #[error("syntax error at byte {pos}: {msg}")]
    Syntax { pos: usize, msg: String },

    #[error("unknown variable `{0}`")]
    UnknownVariable(String),

    #[error("invalid variable context: {0}")]
    InvalidContext(String),

    #[error("variable `{0}` already present in the context")]
    VariableCollision(String),

    #[error("operation is undefined for the zero polynomial")]
    ZeroPolynomial,

    #[error("exponent overflow (limit is 2^32 - 1)")]
    ExponentOverflow,

    #[error("resource limit exceeded: {0}")]
    ResourceLimit(String),

    #[error("polynomial is not homogeneous: {0}")]
    NotHomogeneous(String),

    #[error("the quotient ring is zero (unit ideal)")]
    UnitIdeal,

    #[error("invalid specification: {0}")]
    InvalidSpec(String),

    #[error("series truncation orders differ ({0} vs {1})")]
    OrderMismatch(usize, usize),

    #[error("divisor series has zero constant term")]
    NonUnitDivisor,

    #[error("expected an integer but got {0}")]
    NonIntegral(String),

    #[error("insufficient data: diamond entry h^{{{p},{q}}} is unknown")]
    UnknownEntry { p: usize, q: usize },

    #[error("malformed input: {0}")]
    Format(String),
}
