//! Exact realizations of the rank-one free-boson and Virasoro vertex
//! algebras and their lowest-weight modules.
//!
//! A [`ModuleRealization`] fixes an acting algebra (boson or Virasoro with a
//! chosen central charge) and a module over it (the algebra itself, a
//! momentum module, or a lowest-weight module with a chosen weight `h`).
//! Module elements are exact rational combinations of partition-labelled
//! basis states ([`StateVector`]); generator modes act by straightening and
//! composite modes expand recursively through the iterate formula, memoized
//! per realization.
//!
//! On top of mode actions the crate provides finite windows of the vertex
//! operator `Y(v, x) w` and of the opposite operator
//! `Y°(v, x) w = Y(e^{x L(1)} (-x^{-2})^{deg} v, x^{-1}) w`, exact
//! exponentials `e^{t L(1)}`, the involution `theta(v) = e^{L(1)} (-1)^{deg} v`,
//! and the composition expansion rewriting `u_p (v_q w)` as a finite double
//! sum of single modes.  All gradings are tracked through integer levels
//! above the module's lowest weight, so every computation here is exact.

mod error;
mod indexer;
mod modes;
mod realization;
mod state;

pub use error::VoaError;
pub use indexer::BasisIndexer;
pub use modes::{
    exp_l1_apply, l1_apply, l1_iterates, mode_act, mode_composition_expand, mode_support_top,
    theta_apply, y_o_coefficient, y_o_window, y_window,
};
pub use realization::{AlgebraKind, ModuleKind, ModuleRealization};
pub use state::{BasisState, StateVector};
