use qframe_core::Error as CoreError;

/// A failed command, carrying its process exit code.
#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    PropertyFailed(String),
    #[error("invalid arguments: {0}")]
    InvalidArguments(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("{0}")]
    DimensionMismatch(String),
    #[error("unsupported transform: {0}")]
    UnsupportedTransform(String),
    #[error("{path}: {source}")]
    Io { path: String, source: std::io::Error },
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::PropertyFailed(_) => 1,
            CliError::InvalidArguments(_) | CliError::Io { .. } => 2,
            CliError::Parse(_) => 3,
            CliError::DimensionMismatch(_) => 4,
            CliError::UnsupportedTransform(_) => 5,
        }
    }
}

impl From<CoreError> for CliError {
    fn from(e: CoreError) -> Self {
        let msg = e.to_string();
        match e {
            CoreError::InvalidDimension(_)
            | CoreError::UnsupportedDimension(_)
            | CoreError::InvalidInput(_)
            | CoreError::InvalidEpsilon(_)
            | CoreError::InvalidField(_)
            | CoreError::InvalidPoint(_)
            | CoreError::InvalidWeight(_)
            | CoreError::RankOutOfRange { .. } => CliError::InvalidArguments(msg),
            CoreError::DimensionMismatch { .. } | CoreError::OutcomeSetMismatch => CliError::DimensionMismatch(msg),
            CoreError::NotSquare { .. }
            | CoreError::NonFinite
            | CoreError::NotHermitian(_)
            | CoreError::NotDensity(_)
            | CoreError::NotEffect(_)
            | CoreError::NotPovm(_)
            | CoreError::InvalidOutcomeSet(_) => CliError::Parse(msg),
            CoreError::NotAFrame { .. }
            | CoreError::NotABasis
            | CoreError::DivisionByZero
            | CoreError::CrossSpec
            | CoreError::SingularBasis
            | CoreError::RetryConstellation(_)
            | CoreError::NoFiducialFound { .. } => CliError::PropertyFailed(msg),
        }
    }
}

pub type CliResult<T> = Result<T, CliError>;
