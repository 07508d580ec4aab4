//! Exact sparse linear algebra over arbitrary-precision rationals.
//!
//! Everything downstream of this crate (graded vector spaces, quotient
//! algebras, functional spaces) reduces its questions to three primitives,
//! all of which must be *exact* and *deterministic*:
//!
//! * [`Scalar`] — an arbitrary-precision rational number, always kept in
//!   lowest terms with a positive denominator. No floating point anywhere.
//! * [`SparseVector`] — a finitely supported vector over an indexed basis,
//!   stored as an ordered index → coefficient map with no explicit zeros.
//! * [`SpanHandle`] — an incrementally built reduced row echelon form of a
//!   list of generators, supporting exact membership tests that either
//!   produce coefficients over the *original* generators or a witness index
//!   proving non-membership.
//!
//! Pivoting is deterministic: the pivot of every reduced row is its highest
//! occupied index, and rows are fully inter-reduced. (Downstream, basis
//! indices are enumerated by ascending degree, so highest-index pivoting
//! walks down the degree filtration and keeps fill-in small; any fixed rule
//! would be correct, this one is fast for filtered spans.)
//!
//! [`Sampler`] provides the seeded random rationals used by randomized test
//! suites; with a fixed seed every run of every suite sees the same samples.

mod error;
mod sample;
mod scalar;
mod span;
mod sparse;

pub use error::LinalgError;
pub use sample::Sampler;
pub use scalar::{binomial, factorial, Scalar};
pub use span::{kernel_basis, Membership, SpanHandle};
pub use sparse::SparseVector;
