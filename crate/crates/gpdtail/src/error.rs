//! Error types shared across the crate.

use thiserror::Error;

/// Crate-wide error type.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// Invalid distribution or estimator parameters.
    #[error("invalid parameters: {0}")]
    InvalidParams(String),

    /// A value lies outside the domain of the operation.
    #[error("domain error: {0}")]
    Domain(String),

    /// Two order statistics are equal, so a log-spacing is undefined.
    /// Indices are 1-based, `i < j`.
    #[error("tie between order statistics X_{i} and X_{j}: log-spacing undefined")]
    Tie { i: usize, j: usize },

    /// A matrix or sample has the wrong size for the operation.
    #[error("dimension mismatch: expected n = {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    /// Spacing weights were required to sum to zero but do not.
    #[error("spacing weights must sum to zero (sum = {sum:e})")]
    NotZeroSum { sum: f64 },

    /// An index is out of range for the sample or matrix at hand.
    #[error("index error: {0}")]
    Index(String),

    /// Invalid experiment configuration.
    #[error("configuration error: {0}")]
    Config(String),

    /// A numerical procedure failed (e.g. a singular linear system).
    #[error("numerical error: {0}")]
    Numerical(String),

    /// The requested scheme has no certified-unbiased weight matrix.
    #[error("scheme '{0}' failed the unbiasedness certificate")]
    UncertifiedScheme(String),

    /// Malformed weight-matrix document.
    #[error("invalid weight matrix: {0}")]
    InvalidWeights(String),
}

pub type Result<T> = std::result::Result<T, Error>;
