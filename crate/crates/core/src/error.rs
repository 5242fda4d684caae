use alloc::string::String;

/// Errors raised by the operator algebra, the frame machinery and the
/// representation factories.
#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum Error {
    #[error("invalid dimension {0}: need d >= 2")]
    InvalidDimension(usize),
    #[error("unsupported dimension: {0}")]
    UnsupportedDimension(String),
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },
    #[error("matrix has non-finite entries")]
    NonFinite,
    #[error("operator is not Hermitian (deviation {0:.3e})")]
    NotHermitian(f64),
    #[error("operator is not a density operator: {0}")]
    NotDensity(String),
    #[error("operator is not an effect: {0}")]
    NotEffect(String),
    #[error("effects do not sum to the identity (deviation {0:.3e})")]
    NotPovm(f64),
    #[error("rank {rank} out of range for dimension {dim}")]
    RankOutOfRange { rank: usize, dim: usize },
    #[error("not a frame: lower frame bound {lower:.3e}")]
    NotAFrame { lower: f64 },
    #[error("not a basis: Gram matrix is singular")]
    NotABasis,
    #[error("outcome sets differ")]
    OutcomeSetMismatch,
    #[error("invalid outcome set: {0}")]
    InvalidOutcomeSet(String),
    #[error("division by zero in finite field")]
    DivisionByZero,
    #[error("elements belong to different fields")]
    CrossSpec,
    #[error("invalid field specification: {0}")]
    InvalidField(String),
    #[error("field elements do not form a basis")]
    SingularBasis,
    #[error("invalid kernel weight: gamma_{0} is zero")]
    InvalidWeight(usize),
    #[error("invalid sphere point: {0}")]
    InvalidPoint(String),
    #[error("constellation is ill-conditioned (condition number {0:.3e}); draw another")]
    RetryConstellation(f64),
    #[error("no SIC fiducial found (best deviation {best_deviation:.3e})")]
    NoFiducialFound { best_deviation: f64 },
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error("invalid epsilon {0}: must lie in [0, 1]")]
    InvalidEpsilon(f64),
}

pub type Result<T> = core::result::Result<T, Error>;
