//! Mode actions of algebra elements on module vectors, vertex-operator
//! windows, the opposite operator, exponentials of `L(1)`, and the
//! composition expansion that rewrites a composed mode `u_p (v_q w)` as a
//! finite double sum of single modes.

use core_linalg::{binomial, factorial, Scalar};
use formal_calc::LaurentPolynomial;

use crate::error::VoaError;
use crate::realization::{AlgebraKind, ModuleRealization};
use crate::state::{BasisState, StateVector};

/// `v_m w`: the `m`-th mode of the algebra element `v` acting on the module
/// vector `w`.  Bilinear in `v` and `w`; errors when either vector violates
/// its realization's partition constraint.
pub fn mode_act(
    r: &ModuleRealization,
    v: &StateVector,
    m: i64,
    w: &StateVector,
) -> Result<StateVector, VoaError> {
    r.check_algebra_vector(v)?;
    r.check_module_vector(w)?;
    let mut out = StateVector::zero();
    for (vs, vc) in v.iter() {
        for (ws, wc) in w.iter() {
            let c = vc.clone() * wc;
            out.axpy(&c, &mode_on_states(r, vs, m, ws));
        }
    }
    Ok(out)
}

/// Largest `m` for which `v_m w` can be nonzero on grading grounds:
/// `level(w) + level(v) - 1` over the supports.  `None` when either vector
/// is zero (every mode vanishes).
pub fn mode_support_top(v: &StateVector, w: &StateVector) -> Option<i64> {
    let v_top = v.levels_present().into_iter().max()?;
    let w_top = w.levels_present().into_iter().max()?;
    Some(v_top + w_top - 1)
}

/// Mode action on basis states, memoized per realization.
///
/// A non-base state factors as `v = g_p u` with `g` the generating state
/// (boson or conformal vector), `p` the creation mode of the largest part,
/// and `u` the remaining parts.  The composed mode expands by the iterate
/// formula
/// `(g_p u)_m = sum_i (-1)^i C(p,i) ( g_{p-i} u_{m+i} - (-1)^p u_{p+m-i} g_i )`,
/// where both sums truncate because modes that would land below the lowest
/// weight vanish.
fn mode_on_states(r: &ModuleRealization, vs: &BasisState, m: i64, ws: &BasisState) -> StateVector {
    if vs.is_base() {
        return if m == -1 {
            StateVector::from_state(ws.clone())
        } else {
            StateVector::zero()
        };
    }
    let key = (vs.clone(), m, ws.clone());
    if let Some(hit) = r.comp_cache_get(&key) {
        return hit;
    }

    let (mu, u) = vs.split_first().expect("non-base state");
    let mu = mu as i64;
    let p = match r.algebra() {
        AlgebraKind::Heisenberg => -mu,
        AlgebraKind::Virasoro { .. } => -mu + 1,
    };
    let g_wt = r.algebra().generator_weight();
    let u_level = u.level();
    let w_level = ws.level();
    let sign_p = if p.rem_euclid(2) == 0 { 1 } else { -1 };

    let mut acc = StateVector::zero();

    // g_{p-i} (u_{m+i} w): u_{m+i} w sits at level w_level + u_level - m - i - 1,
    // so terms with i > w_level + u_level - m - 1 vanish.
    let i_top_1 = w_level + u_level - m - 1;
    for i in 0..=i_top_1.max(-1) {
        if i < 0 {
            break;
        }
        let inner = mode_on_states(r, &u, m + i, ws);
        if inner.is_zero() {
            continue;
        }
        let outer = r.apply_field_mode(p - i, &inner);
        if outer.is_zero() {
            continue;
        }
        let sign = if i % 2 == 0 { 1 } else { -1 };
        let c = binomial(p, i as u64) * &Scalar::from_int(sign);
        acc.axpy(&c, &outer);
    }

    // u_{p+m-i} (g_i w): g_i w sits at level w_level + g_wt - i - 1, so terms
    // with i > w_level + g_wt - 1 vanish.
    let i_top_2 = w_level + g_wt - 1;
    for i in 0..=i_top_2.max(-1) {
        if i < 0 {
            break;
        }
        let gw = r.field_mode_on_state(i, ws);
        if gw.is_zero() {
            continue;
        }
        let mut term = StateVector::zero();
        for (gs, gc) in gw.iter() {
            term.axpy(gc, &mode_on_states(r, &u, p + m - i, gs));
        }
        if term.is_zero() {
            continue;
        }
        let sign = if i % 2 == 0 { -1 } else { 1 };
        let c = binomial(p, i as u64) * &Scalar::from_int(sign * sign_p);
        acc.axpy(&c, &term);
    }

    r.comp_cache_put(key, acc.clone());
    acc
}

/// The window `[lo, hi]` of the vertex operator `Y(v, x) w`: the
/// coefficient of `x^p` is `v_{-p-1} w`.
pub fn y_window(
    r: &ModuleRealization,
    v: &StateVector,
    w: &StateVector,
    lo: i64,
    hi: i64,
) -> Result<LaurentPolynomial<StateVector>, VoaError> {
    assert!(lo <= hi, "window must be ordered: [{lo}, {hi}]");
    let mut terms = Vec::new();
    for p in lo..=hi {
        let coeff = mode_act(r, v, -p - 1, w)?;
        if !coeff.is_zero() {
            terms.push((p, coeff));
        }
    }
    Ok(LaurentPolynomial::from_terms(terms))
}

/// Coefficient of `x^p` in the opposite operator
/// `Y°(v, x) w = Y(e^{x L(1)} (-x^{-2})^{deg} v, x^{-1}) w`.
///
/// For a component of `v` at weight `h` this is the finite sum
/// `(-1)^h sum_i (1/i!) (L(1)^i v)_{p + 2h - i - 1} w`.
pub fn y_o_coefficient(
    r: &ModuleRealization,
    v: &StateVector,
    w: &StateVector,
    p: i64,
) -> Result<StateVector, VoaError> {
    r.check_algebra_vector(v)?;
    r.check_module_vector(w)?;
    let mut out = StateVector::zero();
    for (h, vh) in v.homogeneous_components() {
        let sign = if h.rem_euclid(2) == 0 {
            Scalar::one()
        } else {
            Scalar::from_int(-1)
        };
        for (i, vi) in l1_iterates(r.self_algebra(), &vh)?.into_iter().enumerate() {
            let m = p + 2 * h - (i as i64) - 1;
            let term = mode_act(r, &vi, m, w)?;
            if term.is_zero() {
                continue;
            }
            let c = sign.clone() / factorial(i as u64);
            out.axpy(&c, &term);
        }
    }
    Ok(out)
}

/// The window `[lo, hi]` of the opposite operator `Y°(v, x) w`.
pub fn y_o_window(
    r: &ModuleRealization,
    v: &StateVector,
    w: &StateVector,
    lo: i64,
    hi: i64,
) -> Result<LaurentPolynomial<StateVector>, VoaError> {
    assert!(lo <= hi, "window must be ordered: [{lo}, {hi}]");
    let mut terms = Vec::new();
    for p in lo..=hi {
        let coeff = y_o_coefficient(r, v, w, p)?;
        if !coeff.is_zero() {
            terms.push((p, coeff));
        }
    }
    Ok(LaurentPolynomial::from_terms(terms))
}

/// `L(1) w` for a module vector `w` of `r`.
pub fn l1_apply(r: &ModuleRealization, w: &StateVector) -> Result<StateVector, VoaError> {
    r.check_module_vector(w)?;
    match r.algebra() {
        AlgebraKind::Virasoro { .. } => Ok(r.apply_generator(1, w)),
        AlgebraKind::Heisenberg => mode_act(r, &r.conformal_vector(), 2, w),
    }
}

/// The iterates `[w, L(1) w, L(1)^2 w, ...]` up to (excluding) the first
/// zero.  Finite because `L(1)` lowers the level and levels are bounded
/// below.
pub fn l1_iterates(r: &ModuleRealization, w: &StateVector) -> Result<Vec<StateVector>, VoaError> {
    let mut out = Vec::new();
    let mut cur = w.clone();
    while !cur.is_zero() {
        out.push(cur.clone());
        cur = l1_apply(r, &cur)?;
    }
    Ok(out)
}

/// `e^{t L(1)} w = sum_i (t^i / i!) L(1)^i w`, an exact finite sum.
pub fn exp_l1_apply(
    r: &ModuleRealization,
    w: &StateVector,
    t: &Scalar,
) -> Result<StateVector, VoaError> {
    let mut out = StateVector::zero();
    for (i, wi) in l1_iterates(r, w)?.into_iter().enumerate() {
        let c = t.pow(i as i64) / factorial(i as u64);
        out.axpy(&c, &wi);
    }
    Ok(out)
}

/// The involution `v -> e^{L(1)} (-1)^{deg} v` on algebra elements.
///
/// Only defined on the self module, where the degree operator has integer
/// eigenvalues.
pub fn theta_apply(r: &ModuleRealization, v: &StateVector) -> Result<StateVector, VoaError> {
    if !r.is_self_module() {
        return Err(VoaError::IncompatibleState {
            detail: "the parity involution needs integer degrees; use the self module".into(),
        });
    }
    r.check_module_vector(v)?;
    let mut signed = StateVector::zero();
    for (h, vh) in v.homogeneous_components() {
        let sign = if h.rem_euclid(2) == 0 { 1 } else { -1 };
        signed.axpy(&Scalar::from_int(sign), &vh);
    }
    exp_l1_apply(r, &signed, &Scalar::one())
}

/// Expands the composed mode `u_p (v_q w)` as the finite double sum
/// `sum_{i=0}^{s} sum_{j>=0} C(p-k, i) C(k, j) (u_{p-k-i+j} v)_{q+k+i-j} w`,
/// valid when `x^k Y(u, x) w` and `x^{s+1+q} Y(v, x) w` both have only
/// nonnegative powers of `x`.
///
/// Both truncation requirements are checked exactly before expanding; a
/// violation reports the first offending nonzero mode.  The returned vector
/// equals `mode_act(u, p, mode_act(v, q, w))`.
#[allow(clippy::too_many_arguments)]
pub fn mode_composition_expand(
    r: &ModuleRealization,
    u: &StateVector,
    p: i64,
    v: &StateVector,
    q: i64,
    w: &StateVector,
    k: i64,
    s: u32,
) -> Result<StateVector, VoaError> {
    r.check_algebra_vector(u)?;
    r.check_algebra_vector(v)?;
    r.check_module_vector(w)?;

    // x^k Y(u, x) w has only nonnegative powers iff u_{k + m} w = 0 for all
    // m >= 0; beyond the grading bound the modes vanish identically.
    if let Some(top) = mode_support_top(u, w) {
        for mode in k..=top.max(k - 1) {
            if mode < k {
                break;
            }
            if !mode_act(r, u, mode, w)?.is_zero() {
                return Err(VoaError::ModePrecondition {
                    mode: format!("u_({mode}) w"),
                });
            }
        }
    }
    // x^{s+1+q} Y(v, x) w has only nonnegative powers iff v_j w = 0 for all
    // j >= q + s + 1.
    let j_floor = q + s as i64 + 1;
    if let Some(top) = mode_support_top(v, w) {
        for mode in j_floor..=top.max(j_floor - 1) {
            if mode < j_floor {
                break;
            }
            if !mode_act(r, v, mode, w)?.is_zero() {
                return Err(VoaError::ModePrecondition {
                    mode: format!("v_({mode}) w"),
                });
            }
        }
    }

    let voa = r.self_algebra();
    let u_top = u.levels_present().into_iter().max().unwrap_or(0);
    let v_top = v.levels_present().into_iter().max().unwrap_or(0);
    let mut out = StateVector::zero();
    for i in 0..=s as i64 {
        let c_i = binomial(p - k, i as u64);
        if c_i.is_zero() {
            continue;
        }
        // (u_{p-k-i+j} v) sits at level u_top + v_top - (p-k-i+j) - 1, so
        // terms with j > u_top + v_top - p + k + i - 1 vanish.
        let j_top = u_top + v_top - p + k + i - 1;
        for j in 0..=j_top.max(-1) {
            if j < 0 {
                break;
            }
            let c_j = binomial(k, j as u64);
            if c_j.is_zero() {
                continue;
            }
            let inner = mode_act(voa, u, p - k - i + j, v)?;
            if inner.is_zero() {
                continue;
            }
            let term = mode_act(r, &inner, q + k + i - j, w)?;
            if term.is_zero() {
                continue;
            }
            let c = c_i.clone() * &c_j;
            out.axpy(&c, &term);
        }
    }
    Ok(out)
}
