use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("characteristic {0} is excluded (p must not be 2, 3 or 5)")]
    ExcludedCharacteristic(u64),
    #[error("rational function fields cannot be nested")]
    NestedFunctionField,
    #[error("invalid parameter symbol '{0}'")]
    InvalidParameter(String),
    #[error("unknown symbol '{0}'")]
    UnknownSymbol(String),
    #[error("wrong coefficient ring: {0}")]
    WrongRing(String),
    #[error("undefined: {0}")]
    Undefined(String),
    #[error("syntax error at position {pos}: {msg}")]
    Syntax { pos: usize, msg: String },
    #[error("division not supported in this ring (position {pos})")]
    DivisionUnsupported { pos: usize },
    #[error("expected degree {expected}, found {found}")]
    Degree { expected: usize, found: usize },
    #[error("not defined: {0}")]
    NotDefined(String),
    #[error("covariant table construction failed: {0}")]
    Construction(String),
    #[error("degenerate specialization: {0}")]
    DegenerateSpecialization(String),
    #[error("unbound template symbol '{0}'")]
    UnboundSymbol(String),
    #[error("denominator is not invertible modulo the polynomial")]
    NotInvertible,
    #[error("no admissible preliminary transformation among the first {0} candidates")]
    SearchFailed(usize),
    #[error("polynomial has repeated roots")]
    RepeatedRoots,
    #[error("internal error: {0}")]
    Internal(String),
    #[error("{0}")]
    Usage(String),
    #[error("cache: {0}")]
    Cache(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
