use thiserror::Error;

/// Errors produced by the linear-algebra primitives.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LinalgError {
    /// A vector mentions an index outside the ambient dimension of the span
    /// it is being tested against.
    #[error("vector index {index} exceeds ambient dimension {ambient}")]
    IndexMismatch {
        /// The offending index.
        index: usize,
        /// The ambient dimension of the span.
        ambient: usize,
    },

    /// A rational literal could not be parsed.
    #[error("malformed rational literal {input:?}: {reason}")]
    BadRational {
        /// The rejected input.
        input: String,
        /// Human-readable cause.
        reason: String,
    },
}
