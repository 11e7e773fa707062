use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseScalarError {
    #[error("empty scalar")]
    Empty,
    #[error("malformed scalar {input:?} at {token:?}")]
    Malformed { token: String, input: String },
    #[error("zero denominator in {token:?}")]
    ZeroDenominator { token: String },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch in {context}: expected {expected}, found {found}")]
    DimensionMismatch {
        context: &'static str,
        expected: usize,
        found: usize,
    },
    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },
    #[error("non-integral spectrum; residual polynomial {residual}")]
    NonIntegralSpectrum { residual: String },
    #[error("not diagonalizable: eigenspaces span {found} of {ambient} dimensions")]
    NotDiagonalizable { found: usize, ambient: usize },
    #[error("gram matrix must be symmetric with real entries")]
    NotSymmetricReal,
    #[error("unsupported size: {0}")]
    UnsupportedSize(String),
    #[error("precondition failed: {0}")]
    Precondition(String),
    #[error("structural error: {0}")]
    Structural(String),
    #[error("internal invariant violation: {0}")]
    Internal(String),
    #[error("{0}")]
    Cayley(String),
    #[error("real form unavailable for pair {0}")]
    RealFormUnavailable(String),
    #[error(transparent)]
    Parse(#[from] ParseScalarError),
    #[error("input error: {0}")]
    Input(String),
}

impl Error {
    /// Whether the error means one of the tool's own invariants broke, as
    /// opposed to bad input or a failed check.
    pub fn is_internal(&self) -> bool {
        matches!(
            self,
            Error::Internal(_) | Error::NonIntegralSpectrum { .. } | Error::NotDiagonalizable { .. }
        )
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
