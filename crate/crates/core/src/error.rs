//! Crate-wide error type.

use thiserror::Error;

pub type Result<T> = std::result::Result<T, GvqError>;

#[derive(Debug, Error)]
pub enum GvqError {
    #[error("bad magic: expected {expected:?}, found {found:?}")]
    BadMagic { expected: [u8; 4], found: [u8; 4] },

    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),

    #[error("non-finite value at element {index}")]
    NonFinite { index: usize },

    #[error("calibration matrix has no samples")]
    EmptyCalibration,

    #[error("matrix is not symmetric")]
    NotSymmetric,

    #[error("matrix not positive definite (Cholesky failed at pivot {pivot})")]
    NotPositiveDefinite { pivot: usize },

    #[error("too few points: {n} points for {k} centroids")]
    TooFewPoints { n: usize, k: usize },

    #[error("config/shape mismatch: {0}")]
    ConfigShapeMismatch(String),

    #[error("index {value} out of range for {bits}-bit packing")]
    IndexOutOfRange { value: u32, bits: u8 },

    #[error("buffer too short: need {need} bytes, have {have}")]
    ShortBuffer { need: usize, have: usize },

    #[error("non-canonical padding: stream pad bits are not zero")]
    NonCanonicalPadding,

    #[error("corrupt container header: {0}")]
    CorruptHeader(String),

    #[error("codebook is not integer-stored")]
    NotIntegerCodebook,

    #[error("signal is identically zero")]
    ZeroSignal,

    #[error("unsupported bit width {0} (minimum 2)")]
    BadBits(u8),

    #[error("no feasible group size for requested overhead: {0}")]
    InfeasibleOverhead(String),

    #[error("unsupported dimensionality {0} for this operation")]
    UnsupportedDimensionality(usize),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}
