use thiserror::Error;

/// Errors produced by the formal-calculus layer.
///
/// Every error is exact and descriptive: out-of-window queries name the
/// offending power, certificate violations name the falsifying coefficient.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FormalError {
    #[error("power {power} outside the computed window [{lo}, {hi}]")]
    OutOfWindow { power: i64, lo: i64, hi: i64 },

    #[error("requested window [{lo}, {hi}] extends past the support bound {bound} on the bounded side")]
    WindowOutsideSupport { lo: i64, hi: i64, bound: i64 },

    #[error("expected a series expanded {expected}, got one expanded {got}")]
    DirectionMismatch {
        expected: &'static str,
        got: &'static str,
    },

    #[error("windows [{lo_a}, {hi_a}] and [{lo_b}, {hi_b}] do not overlap")]
    DisjointWindows {
        lo_a: i64,
        hi_a: i64,
        lo_b: i64,
        hi_b: i64,
    },

    #[error("pole location must be nonzero")]
    ZeroPoleLocation,

    #[error("rational functions carry distinct nonzero pole locations {a} and {b}")]
    PoleMismatch { a: String, b: String },

    #[error("substituting x + z0 into a negative power requires the rational form")]
    NonPolynomialShift,

    #[error("substitution x -> x + {z0} moves the poles off {{0, z}}: {detail}")]
    UnsupportedShift { z0: String, detail: String },

    #[error(
        "pole certificate violated: x^{l} (x-z)^{k} times the series has coefficient {value} at power {power}"
    )]
    ReconstructionInconsistency {
        l: u32,
        k: u32,
        power: i64,
        value: String,
    },

    #[error("window floor {available} is too high to verify the certificate (need coefficients down to power {needed})")]
    InsufficientWindow { available: i64, needed: i64 },

    #[error("evaluation at {at} hits a pole")]
    EvaluationAtPole { at: String },
}
