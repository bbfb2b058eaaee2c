use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid dimension: {0}")]
    InvalidDimension(String),

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("unsupported algebra: {0}")]
    Unsupported(String),

    #[error("span of the supplied vectors is not a subalgebra: {0}")]
    NotSubalgebra(String),

    #[error("invariant form is degenerate on the supplied subspace")]
    DegenerateRestriction,

    #[error("decomposition is not stable under the subalgebra: {0}")]
    NotStable(String),

    #[error("vectors are linearly dependent")]
    LinearlyDependent,

    #[error("singular linear system: {0}")]
    Singular(String),

    #[error("ambient dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("term cap exceeded: {terms} terms > cap {cap}")]
    TermCapExceeded { terms: usize, cap: usize },

    #[error("precondition failed: {0}")]
    Precondition(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("not central: {{H, x[{index}]}} is nonzero")]
    NotCentral { index: usize },

    #[error("internal error: {0}")]
    Internal(String),

    #[error("i/o error: {0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
