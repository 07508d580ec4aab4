use core_linalg::LinalgError;
use thiserror::Error;
use voa_core::VoaError;

/// Errors from quotient-algebra constructions.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum AnError {
    /// `generalized_product` needs `r ≥ s ≥ 0`.
    #[error("generalized product parameters must satisfy r >= s >= 0, got r = {r}, s = {s}")]
    BadProductParams { r: i64, s: i64 },

    /// The level index `n` of a quotient construction must be nonnegative.
    #[error("quotient level index must be nonnegative, got {n}")]
    NegativeLevel { n: i64 },

    /// A vector reaches weight beyond the ambient cutoff of the context.
    #[error("vector has support at weight {level}, beyond the cutoff {cutoff}")]
    SupportExceedsCutoff { level: i64, cutoff: i64 },

    /// Two tables that must share a cutoff were built with different ones.
    #[error("incompatible cutoffs: {left} vs {right}")]
    CutoffMismatch { left: i64, right: i64 },

    /// Two tables or contexts that must share a level index do not.
    #[error("incompatible level indices: expected {expected}, got {got}")]
    LevelMismatch { expected: i64, got: i64 },

    /// The requested construction needs a larger cutoff to be meaningful.
    #[error("cutoff too small for this construction; need at least {required}")]
    CutoffInsufficient { required: i64 },

    /// A reduction escaped the representative range of a table.
    #[error("reduction needs representatives up to weight {required}, beyond the table cutoff {cutoff}")]
    ReductionEscapesTable { required: i64, cutoff: i64 },

    /// The context variant requires the algebra acting on itself.
    #[error("this span variant is defined inside the algebra itself, not on a module")]
    RequiresSelfModule,

    /// Underlying graded-vector-space failure.
    #[error(transparent)]
    Realization(#[from] VoaError),

    /// Underlying linear-algebra failure.
    #[error(transparent)]
    Linalg(#[from] LinalgError),
}
