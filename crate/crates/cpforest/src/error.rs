//! Error type shared across the crate.

use thiserror::Error;

/// Errors raised by dataset validation, model fitting, calibration and
/// prediction.
#[derive(Debug, Error)]
pub enum Error {
    #[error("dataset is empty")]
    EmptyDataset,

    #[error("NaN feature at row {row}, column {col}; missing values are not supported")]
    NanFeature { row: usize, col: usize },

    #[error("non-finite input: {what}")]
    NonFiniteInput { what: String },

    #[error("class label {class} out of range for {n_classes} classes")]
    ClassOutOfRange { class: usize, n_classes: usize },

    #[error("feature count mismatch: model expects {expected}, input has {got}")]
    FeatureCountMismatch { expected: usize, got: usize },

    #[error("tree subset is empty")]
    EmptyTreeSubset,

    #[error("tree index {index} out of range for {n_trees} trees")]
    TreeIndexOutOfRange { index: usize, n_trees: usize },

    #[error("not a probability vector: {reason}")]
    NotAProbabilityVector { reason: String },

    #[error("u = {u} outside [0, 1]")]
    UOutOfRange { u: f64 },

    #[error("alpha = {alpha} outside (0, 1)")]
    AlphaOutOfRange { alpha: f64 },

    #[error("invalid (K, n) = ({k}, {n}): need 2 <= K <= n")]
    InvalidKn { k: usize, n: usize },

    #[error("cv folds K = {k} out of range for n = {n}")]
    KOutOfRange { k: usize, n: usize },

    #[error("schema mismatch: {0}")]
    SchemaMismatch(String),

    #[error("task mismatch: {0}")]
    TaskMismatch(String),

    #[error("every training sample is in-bag for every tree; no out-of-bag calibration possible")]
    AllSamplesInBag,

    #[error("no active calibration samples")]
    NoActiveSamples,

    #[error("tuning set too small: {n} samples, need at least {min}")]
    TuningTooSmall { n: usize, min: usize },

    #[error("bad probability row {row}: {reason}")]
    BadProbabilityRow { row: usize, reason: String },

    #[error("bad probability slice ({i}, {j}): {reason}")]
    BadProbabilitySlice { i: usize, j: usize, reason: String },

    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("length mismatch: {left} vs {right}")]
    LengthMismatch { left: usize, right: usize },

    #[error("empty input: {what}")]
    EmptyInput { what: String },

    #[error("unsupported model format version {got}, expected {expected}")]
    FormatVersion { got: u32, expected: u32 },

    #[error("io error: {0}")]
    Io(#[from] std::io::Error),

    #[error("serialization error: {0}")]
    Serde(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
