//! Formal Laurent calculus in one variable, exact over the rationals.
//!
//! The engine built on top of this crate works with three kinds of object:
//!
//! * [`LaurentPolynomial`] — a finite sum `Σ c_p x^p` with `p ∈ ℤ` and
//!   coefficients in any [`Payload`] (scalars, sparse vectors, module
//!   elements, or Laurent polynomials again for a second variable).
//! * [`SeriesWindow`] — a contiguous block of coefficients of a one-sided
//!   infinite series, tagged with its expansion direction (ascending powers
//!   for expansions at `0`, descending for expansions at `∞`). Queries
//!   outside the window are *errors*, never silent zeros: truncation is
//!   always explicit.
//! * [`RationalFunctionWithPoles`] — an exactly represented rational
//!   function `g(x) / (x^l (x−z)^k)` with poles only at `0` and at a fixed
//!   nonzero `z`, kept in canonical (fully cancelled) form.
//!
//! The two expansion maps [`RationalFunctionWithPoles::iota_zero`] and
//! [`RationalFunctionWithPoles::iota_infty`] produce windows of the Laurent
//! expansions at `0` and `∞`; [`rational_from_upper_expansion`] inverts the
//! second one given a pole certificate `(l, k, z, degree bound)` and
//! *verifies* the certificate against the low-order window coefficients,
//! refusing to reconstruct from inconsistent data. This
//! expand-at-∞ / verify / re-expand-at-0 cycle is the computational heart of
//! the action reconstructions in the higher layers.
//!
//! Binomial conventions are fixed once here ([`binom_expand`]): `(x−z)^n`
//! expands in descending powers of `x`, `(z−x)^n` in ascending powers, and
//! the two-variable `(x₁−x₂)^n` in descending powers of the first variable.

mod binomial;
mod error;
mod laurent;
mod payload;
mod rational;
mod window;

pub use binomial::{binom_expand, binom_expand_two_var, BinomKind};
pub use error::FormalError;
pub use laurent::{poly_div_linear, shift_substitute_poly, LaurentPolynomial};
pub use payload::Payload;
pub use rational::{rational_from_upper_expansion, RationalFunctionWithPoles};
pub use window::{ExpansionDirection, SeriesWindow};
