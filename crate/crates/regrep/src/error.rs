use anv_alg::AnError;
use core_linalg::LinalgError;
use formal_calc::FormalError;
use thiserror::Error;
use voa_core::VoaError;

/// Errors from the functional-space constructions.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum RegrepError {
    /// A functional value has the wrong number of coordinates.
    #[error("functional coordinates have dimension {got}, expected {expected}")]
    CoordinateDimMismatch { expected: usize, got: usize },

    /// Two functionals that must share a coordinate space do not.
    #[error("functionals live over different coordinate spaces: {left} vs {right}")]
    CoordinateSpaceMismatch { left: usize, right: usize },

    /// Certification failed: the functional takes a nonzero value on a
    /// spanning element of the annihilator ideal.
    #[error("functional does not annihilate the reduction span; nonzero value {value} on the spanning element {witness}")]
    AnnihilationFailure { witness: String, value: String },

    /// Certification failed the polynomiality window test: a forbidden
    /// negative power survives in a certified matrix coefficient.
    #[error("window test failed for {element}: power {power} carries the nonzero coefficient {value}")]
    WindowTestFailure {
        element: String,
        power: i64,
        value: String,
    },

    /// An operation requires a homogeneous algebra element.
    #[error("operation requires a homogeneous algebra element; got weights {weights:?}")]
    InhomogeneousInput { weights: Vec<i64> },

    /// Action matrices do not represent the multiplication table.
    #[error("action matrices are inconsistent with the multiplication table: {detail}")]
    InconsistentAction { detail: String },

    /// An exact identity check found a mismatching coefficient.
    #[error("identity check '{check}' failed: {detail}")]
    CheckFailed { check: String, detail: String },

    /// The requested scalar action does not extend to a character of the
    /// table (the table is not generated by the chosen element at this
    /// cutoff, or the action is not multiplicative).
    #[error("cannot extend the generator value to a character of the table: {detail}")]
    CharacterExtensionFailure { detail: String },

    /// Underlying quotient-algebra failure.
    #[error(transparent)]
    Algebra(#[from] AnError),

    /// Underlying series/rational-function failure.
    #[error(transparent)]
    Formal(#[from] FormalError),

    /// Underlying graded-vector-space failure.
    #[error(transparent)]
    Realization(#[from] VoaError),

    /// Underlying linear-algebra failure.
    #[error(transparent)]
    Linalg(#[from] LinalgError),
}
