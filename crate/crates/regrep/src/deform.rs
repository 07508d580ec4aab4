//! The one-parameter deformation of a vertex structure and the residue
//! operators built from it.
//!
//! For a structure `Y` with modes `v_m` and a parameter `z₀`, the deformed
//! structure has modes
//!
//! ```text
//! Res_x x^m Y^[z₀](v, x)
//!   = Σ_{i,j} (−z₀)^{i+j} / i! · C(2·wt v − m − 2 − i, j) · (L(1)^i v)_{m+j}
//! ```
//!
//! When the binomial's upper entry `e_i = 2·wt v − m − 2 − i` is
//! nonnegative the inner sum is finite by itself; otherwise it truncates at
//! the target's *mode ceiling* — the largest mode that can act nonzero,
//! which exists on graded modules (support) and on certified functionals
//! (the annihilation certificate).  The same expansion therefore drives the
//! deformation of the module action, of both functional actions, and of an
//! already-deformed action (the round trip `(Y^[z₀])^[−z₀] = Y`).

use core_linalg::{binomial, factorial, Scalar};
use voa_core::{l1_iterates, mode_act, mode_support_top, ModuleRealization, StateVector};

use crate::certified::{homogeneous_weight, ActionSide, CertifiedFunctional};
use crate::error::RegrepError;
use crate::functional::axpy_coords;

/// Where the deformed modes act: supplies the base mode, the mode ceiling,
/// and the linear structure of the result.
trait ModeTarget {
    type Out;
    fn algebra(&self) -> &ModuleRealization;
    fn zero(&self) -> Self::Out;
    /// Base mode `v_m` applied to the target; `v` homogeneous of weight
    /// `v_weight`.
    fn mode(&self, v: &StateVector, v_weight: i64, m: i64) -> Result<Self::Out, RegrepError>;
    /// Largest mode of `v` that can act nonzero; `None` when every mode
    /// vanishes.
    fn mode_ceiling(&self, v: &StateVector, v_weight: i64) -> Option<i64>;
    fn axpy(out: &mut Self::Out, c: &Scalar, term: &Self::Out);
}

/// `Res_x x^m Y^[z₀](v, x)` against a [`ModeTarget`].
fn deformed_mode<T: ModeTarget>(
    target: &T,
    z0: &Scalar,
    v: &StateVector,
    m: i64,
) -> Result<T::Out, RegrepError> {
    let mut out = target.zero();
    if v.is_zero() {
        return Ok(out);
    }
    let v_weight = homogeneous_weight(v)?;
    if z0.is_zero() {
        let term = target.mode(v, v_weight, m)?;
        T::axpy(&mut out, &Scalar::one(), &term);
        return Ok(out);
    }
    for (i, vi) in l1_iterates(target.algebra(), v)?.into_iter().enumerate() {
        let wt_i = v_weight - i as i64;
        let e_i = 2 * v_weight - m - 2 - i as i64;
        let j_max = if e_i >= 0 {
            e_i
        } else {
            match target.mode_ceiling(&vi, wt_i) {
                Some(ceiling) => ceiling - m,
                None => continue,
            }
        };
        if j_max < 0 {
            continue;
        }
        let outer = (-z0).pow(i as i64) / factorial(i as u64);
        for j in 0..=j_max {
            let b = binomial(e_i, j as u64);
            if b.is_zero() {
                continue;
            }
            let c = outer.clone() * b * (-z0).pow(j);
            let term = target.mode(&vi, wt_i, m + j)?;
            T::axpy(&mut out, &c, &term);
        }
    }
    Ok(out)
}

struct ModuleTarget<'a> {
    r: &'a ModuleRealization,
    w: &'a StateVector,
}

impl ModeTarget for ModuleTarget<'_> {
    type Out = StateVector;

    fn algebra(&self) -> &ModuleRealization {
        self.r.self_algebra()
    }

    fn zero(&self) -> StateVector {
        StateVector::zero()
    }

    fn mode(&self, v: &StateVector, _v_weight: i64, m: i64) -> Result<StateVector, RegrepError> {
        Ok(mode_act(self.r, v, m, self.w)?)
    }

    fn mode_ceiling(&self, v: &StateVector, _v_weight: i64) -> Option<i64> {
        mode_support_top(v, self.w)
    }

    fn axpy(out: &mut StateVector, c: &Scalar, term: &StateVector) {
        out.axpy(c, term);
    }
}

struct FunctionalTarget<'a> {
    side: ActionSide,
    f: &'a CertifiedFunctional,
    w: &'a StateVector,
}

impl ModeTarget for FunctionalTarget<'_> {
    type Out = Vec<Scalar>;

    fn algebra(&self) -> &ModuleRealization {
        self.f.realization().self_algebra()
    }

    fn zero(&self) -> Vec<Scalar> {
        vec![Scalar::zero(); self.f.dim()]
    }

    fn mode(&self, v: &StateVector, _v_weight: i64, m: i64) -> Result<Vec<Scalar>, RegrepError> {
        match self.side {
            ActionSide::Left => crate::actions::yl_mode_eval(self.f, v, m, self.w),
            ActionSide::Right => crate::actions::yr_mode_eval(self.f, v, m, self.w),
        }
    }

    fn mode_ceiling(&self, _v: &StateVector, v_weight: i64) -> Option<i64> {
        // The certificate: modes at wt v + n and above annihilate.
        Some(v_weight + self.f.certificate() - 1)
    }

    fn axpy(out: &mut Vec<Scalar>, c: &Scalar, term: &Vec<Scalar>) {
        axpy_coords(out, c, term);
    }
}

/// A module action that is itself already deformed by `z0_inner`; its mode
/// ceiling is inherited from the base action because every deformed mode at
/// `m` expands through base modes at `m` and above.
struct DeformedModuleTarget<'a> {
    r: &'a ModuleRealization,
    z0_inner: Scalar,
    w: &'a StateVector,
}

impl ModeTarget for DeformedModuleTarget<'_> {
    type Out = StateVector;

    fn algebra(&self) -> &ModuleRealization {
        self.r.self_algebra()
    }

    fn zero(&self) -> StateVector {
        StateVector::zero()
    }

    fn mode(&self, v: &StateVector, _v_weight: i64, m: i64) -> Result<StateVector, RegrepError> {
        deformed_module_mode(self.r, &self.z0_inner, v, m, self.w)
    }

    fn mode_ceiling(&self, v: &StateVector, _v_weight: i64) -> Option<i64> {
        mode_support_top(v, self.w)
    }

    fn axpy(out: &mut StateVector, c: &Scalar, term: &StateVector) {
        out.axpy(c, term);
    }
}

/// `Res_x x^m Y^[z₀](v, x) w` for the module action: the deformed mode of a
/// homogeneous algebra element on a module vector.
pub fn deformed_module_mode(
    r: &ModuleRealization,
    z0: &Scalar,
    v: &StateVector,
    m: i64,
    w: &StateVector,
) -> Result<StateVector, RegrepError> {
    deformed_mode(&ModuleTarget { r, w }, z0, v, m)
}

/// The same deformed mode computed by the direct substitution route:
/// `Res_x x^m Y(u(x), x/(1+z₀x)) w` with
/// `u(x) = e^{−z₀(1+z₀x)L(1)} (1+z₀x)^{−2 wt v} v = Σ_d u_d x^d`, which
/// evaluates to the finite double sum
/// `Σ_d Σ_{m' ≥ m+d} C(m'+1, m'−m−d) z₀^{m'−m−d} (u_d)_{m'} w`.
///
/// Agreeing with [`deformed_module_mode`] on samples is a genuine identity
/// check: the two routes expand the defining expression in different
/// variables.
pub fn deformed_module_mode_direct(
    r: &ModuleRealization,
    z0: &Scalar,
    v: &StateVector,
    m: i64,
    w: &StateVector,
) -> Result<StateVector, RegrepError> {
    let mut out = StateVector::zero();
    if v.is_zero() || w.is_zero() {
        return Ok(out);
    }
    let v_weight = homogeneous_weight(v)?;
    if z0.is_zero() {
        return Ok(mode_act(r, v, m, w)?);
    }
    let iterates = l1_iterates(r.self_algebra(), v)?;
    // A uniform mode ceiling over every component of u(x).
    let top = iterates
        .iter()
        .filter_map(|vi| mode_support_top(vi, w))
        .max();
    let Some(top) = top else {
        return Ok(out);
    };
    for d in 0..=(top - m).max(-1) {
        if d < 0 {
            break;
        }
        // u_d = Σ_i (−z₀)^i / i! · C(i − 2 wt v, d) z₀^d · L(1)^i v
        let mut u_d = StateVector::zero();
        for (i, vi) in iterates.iter().enumerate() {
            let b = binomial(i as i64 - 2 * v_weight, d as u64);
            if b.is_zero() {
                continue;
            }
            let c = (-z0).pow(i as i64) / factorial(i as u64) * b * z0.pow(d);
            u_d.axpy(&c, vi);
        }
        if u_d.is_zero() {
            continue;
        }
        for mp in (m + d)..=top {
            let b = binomial(mp + 1, (mp - m - d) as u64);
            if b.is_zero() {
                continue;
            }
            let c = b * z0.pow(mp - m - d);
            let term = mode_act(r, &u_d, mp, w)?;
            out.axpy(&c, &term);
        }
    }
    Ok(out)
}

/// The round trip: mode `m` of `(Y^[z₀])^[−z₀]` on a module vector, which
/// must reproduce the undeformed mode `v_m w`.
pub fn deformed_round_trip_mode(
    r: &ModuleRealization,
    z0: &Scalar,
    v: &StateVector,
    m: i64,
    w: &StateVector,
) -> Result<StateVector, RegrepError> {
    let target = DeformedModuleTarget {
        r,
        z0_inner: z0.clone(),
        w,
    };
    deformed_mode(&target, &(-z0), v, m)
}

/// Mode `m` of the deformed left or right action on a certified functional,
/// evaluated at `w`.
///
/// # Errors
///
/// Inhomogeneous `v`; certificate violations from the underlying
/// reconstruction.
pub fn deform_mode_eval(
    side: ActionSide,
    z0: &Scalar,
    v: &StateVector,
    m: i64,
    f: &CertifiedFunctional,
    w: &StateVector,
) -> Result<Vec<Scalar>, RegrepError> {
    deformed_mode(&FunctionalTarget { side, f, w }, z0, v, m)
}

/// The weight-zero residue operators of the two deformed actions:
///
/// * side [`ActionSide::Left`] uses `z₀ = 1` and must satisfy
///   `o(v) f (w) = f(w ∗ₙ v)`;
/// * side [`ActionSide::Right`] uses `z₀ = −1` and must satisfy
///   `o(v) f (w) = f(θ(v) ∗ₙ w)`;
///
/// both with the residue taken against `x^{wt v − 1}`.
pub fn o_deformed_action(
    side: ActionSide,
    v: &StateVector,
    f: &CertifiedFunctional,
    w: &StateVector,
) -> Result<Vec<Scalar>, RegrepError> {
    if v.is_zero() {
        return Ok(vec![Scalar::zero(); f.dim()]);
    }
    let v_weight = homogeneous_weight(v)?;
    let z0 = match side {
        ActionSide::Left => Scalar::one(),
        ActionSide::Right => Scalar::from_int(-1),
    };
    deform_mode_eval(side, &z0, v, v_weight - 1, f, w)
}
