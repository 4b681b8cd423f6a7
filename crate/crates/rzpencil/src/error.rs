use crate::scalar::DomainError;

/// Library-wide error type.
#[derive(Debug, Clone, thiserror::Error)]
pub enum Error {
    #[error(transparent)]
    Domain(#[from] DomainError),
    #[error("syntax error at position {pos}: {msg}")]
    Parse { pos: usize, msg: String },
    #[error("unknown variable `{name}` at position {pos}")]
    UnknownVariable { name: String, pos: usize },
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("the zero polynomial is not allowed here")]
    ZeroPolynomial,
    #[error("expected degree {expected}, got {got}")]
    WrongDegree { expected: i64, got: i64 },
    #[error("polynomial is not normalized: constant term must be 1")]
    NotMonicConstant,
    #[error("matrix is not positive definite")]
    NotPositiveDefinite,
    #[error("matrix is not positive semidefinite within tolerance")]
    NotPositiveSemidefinite,
    #[error("matrix is not hermitian")]
    NotHermitian,
    #[error("symbolic determinant limited to size {cap}, pencil has size {size}")]
    SizeCap { size: usize, cap: usize },
    #[error("determinant has a nonzero imaginary residue ({residue}); input was not hermitian")]
    ImaginaryResidue { residue: f64 },
    #[error("cone condition not witnessed after {trials} directions")]
    ConeNotWitnessed { trials: usize },
    #[error("off-block residue {residue} exceeds tolerance; rank precondition violated")]
    OffBlockResidue { residue: f64 },
    #[error("polynomial failed the real zero check")]
    NotRealZero,
    #[error("{0}")]
    Unsupported(String),
    #[error("format error: {0}")]
    Format(String),
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
}

pub type Result<T> = std::result::Result<T, Error>;
