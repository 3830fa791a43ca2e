//! Error type shared across the crate.

use crate::scalar::ScalarField;
use thiserror::Error;

/// Everything that can go wrong while validating inputs or running a probe.
#[derive(Debug, Error)]
pub enum Error {
    /// A vector (or matrix) does not have the dimension the operation expects.
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    /// Real/complex mismatch between a spec and one of its arguments.
    #[error("scalar field mismatch: expected {expected}, got {got}")]
    FieldMismatch {
        expected: ScalarField,
        got: ScalarField,
    },

    /// A coordinate is NaN or infinite.
    #[error("non-finite input at coordinate {index}")]
    NonFinite { index: usize },

    /// A norm description failed validation; the message names the offending
    /// field and constraint, e.g. "p must be ≥ 1".
    #[error("invalid norm spec: {0}")]
    InvalidSpec(String),

    /// A sampling configuration failed validation.
    #[error("invalid sample config: {0}")]
    InvalidConfig(String),

    /// The zero vector was passed where a direction is required.
    #[error("zero vector cannot be normalized")]
    ZeroVector,

    /// Repeated attempts to draw a usable direction all degenerated.
    #[error("unit-sphere draw degenerated after {attempts} attempts")]
    DegenerateDraw { attempts: u32 },

    /// A ray or profile direction is not unit length under the spec's norm.
    #[error("direction must be a unit vector (norm {norm:e} differs from 1 by more than 1e-10)")]
    NonUnitDirection { norm: f64 },

    /// A ray parameter is zero, negative, or non-finite.
    #[error("ray parameter t must be positive and finite (got {t})")]
    NonPositiveT { t: f64 },

    /// The quantity under the square root came out more negative than float
    /// noise can explain; the norm evaluation itself is inconsistent.
    #[error("radicand {value:e} is below the hard floor {floor:e}; norm evaluation is inconsistent")]
    NegativeRadicand { value: f64, floor: f64 },

    /// The defect families disagree in a way the underlying equivalence rules
    /// out: the parallelogram sup is far above threshold while both profile
    /// sups sit below it (or vice versa). Indicates an implementation bug.
    #[error(
        "defect families disagree: parallelogram sup {parallelogram:e} vs profile sups \
         {homogeneity:e}/{identity:e} at threshold {threshold:e}"
    )]
    EquivalenceViolation {
        parallelogram: f64,
        homogeneity: f64,
        identity: f64,
        threshold: f64,
    },

    /// An internal consistency check failed. Always a bug, never bad input.
    #[error("internal self-check failed: {0}")]
    SelfCheck(String),
}

pub type Result<T> = std::result::Result<T, Error>;
