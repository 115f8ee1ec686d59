use std::io;

/// Crate-wide error type.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("shape mismatch: {0}")]
    Shape(String),

    #[error("parse error at line {line}: {msg}")]
    Parse { line: u64, msg: String },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("invalid scenario: {0}")]
    InvalidScenario(String),

    #[error("unknown vehicle id {0}")]
    UnknownVehicle(u64),

    #[error("unknown ablation variant '{0}'")]
    UnknownVariant(String),

    #[error("empty input: {0}")]
    EmptyInput(&'static str),

    #[error("non-finite gradient (training diverged?)")]
    NonFiniteGradient,

    #[error("training diverged: {0}")]
    TrainingDiverged(String),

    #[error("bad magic bytes (not a model file)")]
    BadMagic,

    #[error("unsupported model format version {0}")]
    UnsupportedVersion(u16),

    #[error("model file truncated")]
    Truncated,

    #[error("model file corrupted: {0}")]
    Corrupted(String),

    #[error("classifier and regressor were trained with different normalizers")]
    NormalizerMismatch,

    #[error(transparent)]
    Io(#[from] io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub(crate) fn shape(msg: impl Into<String>) -> Self {
        Error::Shape(msg.into())
    }

    pub(crate) fn arg(msg: impl Into<String>) -> Self {
        Error::InvalidArgument(msg.into())
    }
}
