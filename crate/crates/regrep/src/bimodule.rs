//! The two-sided quotient-algebra action on certified functionals and the
//! intertwiner between its two realizations.
//!
//! A pair `(a₁, a₂)` of algebra elements acts on a functional in two ways:
//!
//! * **dual route** — through the module: `((a₁,a₂)f)(w) = f(θ(a₂) ∗ₙ (w ∗ₙ a₁))`;
//! * **canonical route** — through the vertex actions:
//!   `a₁` by its left mode at `wt a₁ − 1` and `a₂` by its right mode at
//!   `wt a₂ − 1`.
//!
//! The two are intertwined not by the identity but by the invertible map
//! `σ = exp(L^L(1) − L^R(1))`, where `L^side(1)` is the weight-lowering
//! conformal mode of each action.  The exponential is a finite sum on a
//! certified functional: `(L^side(1))^{n+1}` kills anything certified at
//! `n`.  [`sigma_check`] verifies both the intertwining relation and that
//! finite-nilpotency horizon on samples.

use std::sync::Arc;

use anv_alg::{star_product, star_product_right};
use core_linalg::{factorial, Scalar};
use voa_core::theta_apply;
use voa_core::StateVector;

use crate::actions::yl_mode_eval;
use crate::certified::{ActionSide, CertifiedFunctional};
use crate::error::RegrepError;
use crate::functional::{axpy_coords, coords_are_zero};

/// The dual route: `f(θ(a₂) ∗ₙ (w ∗ₙ a₁))` with `n` the certificate of `f`,
/// evaluated directly.
pub fn dual_bimodule_action(
    f: &CertifiedFunctional,
    a1: &StateVector,
    a2: &StateVector,
    w: &StateVector,
) -> Result<Vec<Scalar>, RegrepError> {
    let r = f.realization();
    let n = f.certificate();
    let right = star_product_right(r, w, a1, n)?;
    if right.is_zero() {
        return Ok(vec![Scalar::zero(); f.dim()]);
    }
    let theta_a2 = theta_apply(r.self_algebra(), a2)?;
    let full = star_product(r, &theta_a2, &right, n)?;
    f.eval_vector(&full)
}

/// One ladder step of the weight-lowering conformal mode `L(1)` of one of
/// the two actions: the mode of the conformal vector at index 2.
fn l1_image(
    side: ActionSide,
    f: &Arc<CertifiedFunctional>,
) -> Result<Arc<CertifiedFunctional>, RegrepError> {
    let omega = f.realization().conformal_vector();
    Ok(Arc::new(CertifiedFunctional::mode_image(
        side, &omega, 2, f,
    )?))
}

/// `exp(sign · (L^L(1) − L^R(1))) f` as a finite linear combination of
/// nested mode images: both ladders break off at the certificate, since
/// `(L^side(1))^{n+1}` annihilates a functional certified at `n`.
///
/// `sign = 1` is the direction that intertwines the dual route with the
/// canonical route (see [`sigma_check`]).
pub fn sigma_functional(
    f: &Arc<CertifiedFunctional>,
    sign: &Scalar,
) -> Result<CertifiedFunctional, RegrepError> {
    let n = f.certificate().max(0);
    let realization = f.realization().clone();
    let dim = f.dim();
    let mut terms: Vec<(Scalar, Arc<CertifiedFunctional>)> = Vec::new();
    let mut right_chain = f.clone();
    for j in 0..=n {
        if j > 0 {
            right_chain = l1_image(ActionSide::Right, &right_chain)?;
        }
        let mut chain = right_chain.clone();
        for i in 0..=n {
            if i > 0 {
                chain = l1_image(ActionSide::Left, &chain)?;
            }
            // sign^i · (−sign)^j / (i! j!)
            let c = sign.pow(i) * (-sign).pow(j) / (factorial(i as u64) * factorial(j as u64));
            terms.push((c, chain.clone()));
        }
    }
    CertifiedFunctional::linear(realization, dim, terms)
}

/// The canonical route: `a₁` acts by its left mode at `wt a₁ − 1`, `a₂` by
/// its right mode at `wt a₂ − 1` (the two commute); inhomogeneous inputs
/// act component-wise.
pub fn canonical_pair_eval(
    f: &Arc<CertifiedFunctional>,
    a1: &StateVector,
    a2: &StateVector,
    w: &StateVector,
) -> Result<Vec<Scalar>, RegrepError> {
    let realization = f.realization().clone();
    let dim = f.dim();
    let mut right_terms: Vec<(Scalar, Arc<CertifiedFunctional>)> = Vec::new();
    for (h, a2h) in a2.homogeneous_components() {
        let g = CertifiedFunctional::mode_image(ActionSide::Right, &a2h, h - 1, f)?;
        right_terms.push((Scalar::one(), Arc::new(g)));
    }
    let g = CertifiedFunctional::linear(realization, dim, right_terms)?;
    let mut out = vec![Scalar::zero(); dim];
    for (h, a1h) in a1.homogeneous_components() {
        let value = yl_mode_eval(&g, &a1h, h - 1, w)?;
        axpy_coords(&mut out, &Scalar::one(), &value);
    }
    Ok(out)
}

/// Verifies on samples that `σ = exp(L^L(1) − L^R(1))` intertwines the dual
/// route with the canonical route:
///
/// ```text
/// σ((a₁,a₂)·f)  =  (a₁ left-mode ∘ a₂ right-mode)(σ f)
/// ```
///
/// for every pair in `pairs`, evaluated at every probe vector.  Before
/// checking, the finite-nilpotency horizon is verified: `(L^side(1))^{n+1}`
/// applied to `f` must vanish on all probes for both sides — a failure
/// there means the certificate does not bound the ladder and the
/// exponential would be infinite.
///
/// # Errors
///
/// [`RegrepError::CheckFailed`] names the failing pair, probe, and values.
pub fn sigma_check(
    f: &Arc<CertifiedFunctional>,
    pairs: &[(StateVector, StateVector)],
    probes: &[StateVector],
) -> Result<(), RegrepError> {
    let n = f.certificate().max(0);

    for side in [ActionSide::Left, ActionSide::Right] {
        let mut chain = f.clone();
        for _ in 0..=n {
            chain = l1_image(side, &chain)?;
        }
        for w in probes {
            let value = chain.eval_vector(w)?;
            if !coords_are_zero(&value) {
                return Err(RegrepError::CheckFailed {
                    check: "weight-lowering nilpotency horizon".into(),
                    detail: format!(
                        "({side:?} conformal mode)^{} does not annihilate the functional at {w:?}: {value:?}",
                        n + 1
                    ),
                });
            }
        }
    }

    let sign = Scalar::one();
    let sigma_f = Arc::new(sigma_functional(f, &sign)?);
    for (a1, a2) in pairs {
        let dual = Arc::new(CertifiedFunctional::dual_pair(a1, a2, f));
        let sigma_dual = sigma_functional(&dual, &sign)?;
        for w in probes {
            let lhs = sigma_dual.eval_vector(w)?;
            let rhs = canonical_pair_eval(&sigma_f, a1, a2, w)?;
            if lhs != rhs {
                return Err(RegrepError::CheckFailed {
                    check: "two-route intertwining".into(),
                    detail: format!(
                        "pair ({a1:?}, {a2:?}) at {w:?}: dual-then-map {lhs:?}, map-then-canonical {rhs:?}"
                    ),
                });
            }
        }
    }
    Ok(())
}
