//! Error type for realization and mode-action operations.

use thiserror::Error;

/// Errors raised by basis construction, mode actions, and composition
/// expansions.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum VoaError {
    /// A partition part violates the minimum-part constraint of the
    /// realization it was offered to (e.g. a part of size 1 in the vacuum
    /// module of the Virasoro algebra, where the level-1 state is zero).
    #[error("invalid partition part {part}: this realization requires parts >= {min_part}")]
    InvalidPartition { part: u32, min_part: u32 },

    /// Partition parts must be listed in descending order.
    #[error("partition parts must be descending: found {prev} before {next}")]
    UnsortedPartition { prev: u32, next: u32 },

    /// A state was used with a realization it does not belong to.
    #[error("state is incompatible with this realization: {detail}")]
    IncompatibleState { detail: String },

    /// A composition expansion was invoked with truncation parameters that
    /// the inputs do not actually satisfy; the offending nonzero mode is
    /// named so the caller can widen the parameters.
    #[error("truncation precondition failed: {mode} acts nonzero")]
    ModePrecondition { mode: String },

    /// A vector was required to be concentrated in a single degree.
    #[error("vector is not homogeneous: degrees {degrees:?} present")]
    NotHomogeneous { degrees: Vec<i64> },

    /// A vector reached beyond the degree range covered by an indexer.
    #[error("degree {level} exceeds the indexed cutoff {cutoff}")]
    LevelBeyondCutoff { level: i64, cutoff: i64 },
}
