use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("dimension must be at least 1")]
    EmptyDimension,

    #[error("non-finite entry at index {index}")]
    NonFinite { index: usize },

    #[error("{what} at index {index} is not unimodular (|z| = {modulus})")]
    NotUnimodular {
        what: &'static str,
        index: usize,
        modulus: f64,
    },

    #[error("operator is not unitary: ||U*U - I||_F = {residual:e}")]
    NotUnitary { residual: f64 },

    #[error("A-factor is not diagonal: off-diagonal mass {off_diagonal:e}")]
    NotDiagonal { off_diagonal: f64 },

    #[error("sequence too short: need index {needed}, have up to {available}")]
    SequenceTooShort { needed: usize, available: usize },

    #[error("coefficient index {n} lies outside band {band}")]
    OutOfBand { n: i64, band: usize },

    #[error("duplicate coefficient index {n}")]
    DuplicateIndex { n: i64 },

    #[error("too few samples: {samples} samples cannot resolve band {band} (need at least {needed})")]
    Aliasing {
        samples: usize,
        band: usize,
        needed: usize,
    },

    #[error("invalid window {window} for dimension {dim}")]
    InvalidWindow { window: usize, dim: usize },

    #[error("band {band} requires dimension greater than {band}, got {dim}")]
    BandTooLarge { band: usize, dim: usize },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}
