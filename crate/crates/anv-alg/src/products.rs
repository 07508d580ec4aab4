//! Binomially weighted residue products.
//!
//! Every product in this crate is a residue of the shape
//! `Res_x x^A (1+x)^{wt v + E} Y(v,x) w`, i.e. the finite sum
//! `Σ_{i≥0} C(wt v + E, i) · v_{A+i} w` taken per homogeneous component of
//! `v`. The exponent offset `E` and the mode shift `A` distinguish the
//! products; everything is exact and truncates by the grading.

use core_linalg::{binomial, Scalar};
use voa_core::{mode_act, mode_support_top, ModuleRealization, StateVector};

use crate::error::AnError;

/// `Σ_{i≥0} C(wt v + exp_offset, i) · v_{mode_shift + i} w`, extended
/// linearly over the homogeneous components of `v` (each component uses its
/// own weight in the binomial exponent).
///
/// When the exponent is negative the binomial series is infinite, but the
/// sum still truncates exactly: modes above the support top of the pair
/// annihilate `w`.
pub fn weighted_mode_sum(
    r: &ModuleRealization,
    v: &StateVector,
    w: &StateVector,
    mode_shift: i64,
    exp_offset: i64,
) -> Result<StateVector, AnError> {
    let mut out = StateVector::zero();
    let Some(top) = mode_support_top(v, w) else {
        return Ok(out);
    };
    for (h, vh) in v.homogeneous_components() {
        let exponent = h + exp_offset;
        let support_bound = top - mode_shift;
        let i_max = if exponent >= 0 {
            exponent.min(support_bound)
        } else {
            support_bound
        };
        let mut i = 0i64;
        while i <= i_max {
            let c = binomial(exponent, i as u64);
            if !c.is_zero() {
                let term = mode_act(r, &vh, mode_shift + i, w)?;
                out.axpy(&c, &term);
            }
            i += 1;
        }
    }
    Ok(out)
}

/// The level-`n` annihilation product
/// `Res_x x^{-2n-2} (1+x)^{wt v + n} Y(v,x) w`.
///
/// Its span (together with the translate images) is the congruence ideal the
/// level-`n` quotient divides by.
pub fn circ_product(
    r: &ModuleRealization,
    v: &StateVector,
    w: &StateVector,
    n: i64,
) -> Result<StateVector, AnError> {
    if n < 0 {
        return Err(AnError::NegativeLevel { n });
    }
    weighted_mode_sum(r, v, w, -2 * n - 2, n)
}

/// The sharpened annihilation family
/// `Res_x x^{-2n-2-r} (1+x)^{wt v + n + s} Y(v,x) w` for `r ≥ s ≥ 0`.
///
/// At `(r, s) = (0, 0)` this is exactly [`circ_product`]; deeper `r` reaches
/// lower modes and every member lies in the annihilation span.
pub fn generalized_product(
    rea: &ModuleRealization,
    v: &StateVector,
    w: &StateVector,
    n: i64,
    r: i64,
    s: i64,
) -> Result<StateVector, AnError> {
    if n < 0 {
        return Err(AnError::NegativeLevel { n });
    }
    if s < 0 || r < s {
        return Err(AnError::BadProductParams { r, s });
    }
    weighted_mode_sum(rea, v, w, -2 * n - 2 - r, n + s)
}

/// The level-`n` multiplication
/// `u ∗ w = Σ_{m=0}^{n} (-1)^m C(m+n, n) Res_x x^{-n-m-1} (1+x)^{wt u + n} Y(u,x) w`.
///
/// For `w` in the algebra this is the quotient product; for `w` in a module
/// it is the left action on the quotient bimodule.
pub fn star_product(
    r: &ModuleRealization,
    u: &StateVector,
    w: &StateVector,
    n: i64,
) -> Result<StateVector, AnError> {
    if n < 0 {
        return Err(AnError::NegativeLevel { n });
    }
    let mut out = StateVector::zero();
    for m in 0..=n {
        let sign = if m % 2 == 0 { Scalar::one() } else { -Scalar::one() };
        let c = sign * binomial(m + n, n as u64);
        let term = weighted_mode_sum(r, u, w, -n - m - 1, n)?;
        out.axpy(&c, &term);
    }
    Ok(out)
}

/// The level-`n` right action of an algebra element `v` on `w`, written on
/// the left of the module vector:
/// `w ∗ v = Σ_{m=0}^{n} (-1)^{n-m} C(-n-1, m) Res_x x^{-n-m-1} (1+x)^{wt v + m - 1} Y(v,x) w`.
///
/// The binomial exponent `wt v + m − 1` may be negative; the series still
/// truncates by the grading.
pub fn star_product_right(
    r: &ModuleRealization,
    w: &StateVector,
    v: &StateVector,
    n: i64,
) -> Result<StateVector, AnError> {
    if n < 0 {
        return Err(AnError::NegativeLevel { n });
    }
    let mut out = StateVector::zero();
    for m in 0..=n {
        let sign = if (n - m) % 2 == 0 { Scalar::one() } else { -Scalar::one() };
        let c = sign * binomial(-n - 1, m as u64);
        let term = weighted_mode_sum(r, v, w, -n - m - 1, m - 1)?;
        out.axpy(&c, &term);
    }
    Ok(out)
}

/// `Res_x (1+x)^{wt v - 1} Y(v,x) w = Σ_i C(wt v - 1, i) v_i w`, the exact
/// defect by which left and right level-`n` multiplications fail to commute:
/// `v ∗ w − w ∗ v ≡ commutator_defect(v, w)` modulo the annihilation span.
pub fn commutator_defect(
    r: &ModuleRealization,
    v: &StateVector,
    w: &StateVector,
) -> Result<StateVector, AnError> {
    weighted_mode_sum(r, v, w, 0, -1)
}

/// `L(-1)w + L(0)w`, computed through the modes of the conformal vector so
/// it is uniform across realizations. These images are part of the
/// congruence ideal: division by them is what collapses the weight grading
/// to a filtration.
pub fn translate_image(r: &ModuleRealization, w: &StateVector) -> Result<StateVector, AnError> {
    let omega = r.self_algebra().conformal_vector();
    let mut out = mode_act(r, &omega, 0, w)?;
    let l0 = mode_act(r, &omega, 1, w)?;
    out.axpy(&Scalar::one(), &l0);
    Ok(out)
}
