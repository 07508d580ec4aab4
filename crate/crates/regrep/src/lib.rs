//! Regular-representation machinery on top of the graded quotient algebras:
//! linear functionals on module level windows, certified annihilation
//! bounds, the left/right vertex actions on functionals recovered through
//! exact rational reconstruction, their one-parameter deformations, the
//! two-sided module structure with its exponential twist, annihilator
//! subspace bases, and induction from finite-dimensional quotient-algebra
//! modules.
//!
//! The central object is [`CertifiedFunctional`]: a functional `f` on a
//! graded module together with a certificate level `n` guaranteeing that
//! `f` kills every mode image `v_{wt v + m} w` with `m ≥ n`.  The
//! certificate is what makes the action well defined: matrix coefficients
//! `f(Y°(v, x) w)` of a certified functional are rational with poles only
//! at `0` and `-1`, so finitely many exactly-computed series coefficients
//! determine them, and the left/right mode actions are read off as
//! expansion coefficients of the reconstructed rational functions in the
//! two expansion regimes.

mod action;
mod actions;
mod bimodule;
mod certified;
mod deform;
mod error;
mod functional;
mod induce;
mod omega;

pub use action::{AnAction, Matrix};
pub use actions::{
    jacobi_window_check, matrix_coeff_rational, yl_mode_eval, yr_mode_eval, yr_mode_eval_plain,
};
pub use bimodule::{canonical_pair_eval, dual_bimodule_action, sigma_check, sigma_functional};
pub use certified::{certify_hom_anw, ActionSide, CertifiedFunctional};
pub use deform::{
    deform_mode_eval, deformed_module_mode, deformed_module_mode_direct, deformed_round_trip_mode,
    o_deformed_action,
};
pub use error::RegrepError;
pub use functional::Functional;
pub use induce::{induce, induce_with, InduceParams, InducedModuleResult};
pub use omega::{
    generated_submodule, nilpotency_check, omega_n_basis, omega_shift_check, GeneratedSubmodule,
    NilpotencyReport, OmegaBasis,
};
