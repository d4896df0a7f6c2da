use thiserror::Error;

/// Errors raised by the algebra engine and the I/O layer.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected} variables, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("leading term of the zero polynomial is undefined")]
    ZeroPolynomial,

    #[error("invalid ring: {0}")]
    InvalidRing(String),

    #[error("invalid monomial order: {0}")]
    InvalidOrder(String),

    #[error("Buchberger step limit of {limit} pair reductions exceeded")]
    StepLimit { limit: u64 },

    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },

    #[error("contract violation: {0}")]
    Contract(String),

    #[error("t = {t} is outside the admissible range 0..={max}")]
    LevelOutOfRange { t: i64, max: i64 },

    #[error("oracle supports between {min} and {max} primes, got {found}")]
    OracleSize { min: usize, max: usize, found: usize },

    #[error("prime family is not equidimensional (quotient dimensions {dims:?}, ambient {ambient})")]
    NotEquidimensional { dims: Vec<i64>, ambient: i64 },

    #[error("prime verification failed: {0}")]
    PrimeVerification(String),

    #[error("deformation integrity violated: {0}")]
    DeformationIntegrity(String),

    #[error("unsupported: {0}")]
    Unsupported(String),

    #[error("invalid corpus entry: {0}")]
    InvalidEntry(String),

    #[error("internal error: {0}")]
    Internal(String),

    #[error("i/o error: {0}")]
    Io(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}
