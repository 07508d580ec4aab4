//! The two vertex actions on certified functionals.
//!
//! For a certified functional `f`, a homogeneous algebra element `v` and a
//! module vector `w`, the series `⟨f Y°(v,x) w⟩` has finitely many positive
//! powers of `x` (grading) and its negative tail is certified to sum to a
//! rational function with pole orders at most `l = wt v + n` at both `0`
//! and `-1`.  Reconstructing that rational function once gives everything:
//!
//! * the **right action** series is its re-expansion at `0`;
//! * the **left action** series is the re-expansion at `0` after the exact
//!   substitution `x ↦ x - 1` (the two poles trade places);
//! * the three-term **Jacobi window check** compares residue grids of both
//!   against the original upper series.
//!
//! The reconstruction window is extended [`CERT_WINDOW_SLACK`] coefficients
//! below the certified floor `-2l`, so that a functional violating its
//! certificate produces a detectable nonzero forbidden coefficient instead
//! of a silently wrong rational function.

use core_linalg::{binomial, Scalar};
use formal_calc::{
    rational_from_upper_expansion, ExpansionDirection, RationalFunctionWithPoles, SeriesWindow,
};
use voa_core::{y_o_coefficient, StateVector};

use crate::certified::{homogeneous_weight, CertifiedFunctional};
use crate::error::RegrepError;
use crate::functional::Functional;

/// Extra coefficients computed below the certified pole floor.  The
/// reconstruction verifies every product coefficient its window reaches, so
/// a positive slack is what turns certificate violations into errors.
pub(crate) const CERT_WINDOW_SLACK: i64 = 2;

/// The distinguished expansion point of the two-variable picture.
pub(crate) fn z_point() -> Scalar {
    Scalar::from_int(-1)
}

/// Per-coordinate windows of the upper expansion of `⟨f Y°(v,x) w⟩` on
/// `[lo, hi]`.  Each window coefficient at `p` is the value of `f` on the
/// `Y°`-coefficient state, computed once per `p` across all coordinates.
pub(crate) fn upper_rows(
    f: &CertifiedFunctional,
    v: &StateVector,
    w: &StateVector,
    lo: i64,
    hi: i64,
) -> Result<Vec<SeriesWindow<Scalar>>, RegrepError> {
    let r = f.realization();
    let mut rows = vec![SeriesWindow::zero(ExpansionDirection::AtInfinity, lo, hi); f.dim()];
    for p in lo..=hi {
        let y = y_o_coefficient(r, v, w, p)?;
        if y.is_zero() {
            continue;
        }
        let values = f.eval_vector(&y)?;
        for (row, value) in rows.iter_mut().zip(values) {
            if !value.is_zero() {
                row.set(p, value);
            }
        }
    }
    Ok(rows)
}

/// The standard reconstruction window and pole data for `(f, v, w)`:
/// `(lo, hi, l, degree_bound)` with `l = wt v + n`, `lo = -2l - slack`,
/// `hi = top level of w − wt v` and `degree_bound = top level of w + wt v + 2n`.
fn standard_window(f: &CertifiedFunctional, v_weight: i64, w: &StateVector) -> (i64, i64, i64, i64) {
    let n = f.certificate();
    let l = v_weight + n;
    let w_top = w.levels_present().into_iter().max().unwrap_or(0);
    let lo = -2 * l - CERT_WINDOW_SLACK;
    let hi = (w_top - v_weight).max(lo);
    let degree_bound = w_top + v_weight + 2 * n;
    (lo, hi, l, degree_bound)
}

fn reconstruct(
    row: &SeriesWindow<Scalar>,
    l: i64,
    degree_bound: i64,
) -> Result<RationalFunctionWithPoles, RegrepError> {
    Ok(rational_from_upper_expansion(
        row,
        l as u32,
        l as u32,
        &z_point(),
        degree_bound,
    )?)
}

/// All coordinate matrix coefficients of `(f, v, w)` as reconstructed
/// rational functions.
pub(crate) fn matrix_coeff_all(
    f: &CertifiedFunctional,
    v: &StateVector,
    w: &StateVector,
) -> Result<Vec<RationalFunctionWithPoles>, RegrepError> {
    let v_weight = homogeneous_weight(v)?;
    let (lo, hi, l, degree_bound) = standard_window(f, v_weight, w);
    let rows = upper_rows(f, v, w, lo, hi)?;
    rows.iter()
        .map(|row| reconstruct(row, l, degree_bound))
        .collect()
}

/// The matrix coefficient `⟨u*, f Y°(v,x) w⟩` for one coordinate `u*`,
/// reconstructed as a rational function with poles at `0` and `-1` of order
/// at most `wt v + certificate`.
///
/// # Errors
///
/// A reconstruction inconsistency means the certificate is violated: the
/// functional is not a functional on the level-`n` quotient.
pub fn matrix_coeff_rational(
    f: &CertifiedFunctional,
    v: &StateVector,
    w: &StateVector,
    coord: usize,
) -> Result<RationalFunctionWithPoles, RegrepError> {
    if coord >= f.dim() {
        return Err(RegrepError::CoordinateDimMismatch {
            expected: f.dim(),
            got: coord + 1,
        });
    }
    if v.is_zero() {
        return Ok(RationalFunctionWithPoles::zero(z_point())?);
    }
    let v_weight = homogeneous_weight(v)?;
    let (lo, hi, l, degree_bound) = standard_window(f, v_weight, w);
    let rows = upper_rows(f, v, w, lo, hi)?;
    reconstruct(&rows[coord], l, degree_bound)
}

/// Coefficient of `x^{target}` in the expansion of `rat` at `0`, reading
/// coefficients below the pole floor as exact zeros.
fn expansion_coeff_at_zero(
    rat: &RationalFunctionWithPoles,
    target: i64,
) -> Result<Scalar, RegrepError> {
    let floor = -(rat.pole_order_at_zero() as i64);
    if target < floor {
        return Ok(Scalar::zero());
    }
    Ok(rat.iota_zero(target, target)?.coeff(target)?)
}

/// The mode `m` of the right vertex action on a certified functional,
/// evaluated at `w`: the coefficient of `x^{-m-1}` in the re-expansion at
/// `0` of the reconstructed matrix coefficients.
///
/// # Errors
///
/// Inhomogeneous `v`; certificate violations from the reconstruction.
pub fn yr_mode_eval(
    f: &CertifiedFunctional,
    v: &StateVector,
    m: i64,
    w: &StateVector,
) -> Result<Vec<Scalar>, RegrepError> {
    if v.is_zero() || w.is_zero() {
        return Ok(vec![Scalar::zero(); f.dim()]);
    }
    let rats = matrix_coeff_all(f, v, w)?;
    let target = -m - 1;
    rats.iter()
        .map(|rat| expansion_coeff_at_zero(rat, target))
        .collect()
}

/// The mode `m` of the right vertex action on a plain finite-support
/// functional.  Here `⟨f Y°(v,x) w⟩` is itself a Laurent polynomial, both
/// re-expansions are the identity, and the mode is directly
/// `f(Y°-coefficient at −m−1)`.
pub fn yr_mode_eval_plain(
    f: &Functional,
    r: &std::sync::Arc<voa_core::ModuleRealization>,
    v: &StateVector,
    m: i64,
    w: &StateVector,
) -> Result<Vec<Scalar>, RegrepError> {
    let y = y_o_coefficient(r, v, w, -m - 1)?;
    Ok(f.eval(&y))
}

/// The mode `m` of the left vertex action on a certified functional,
/// evaluated at `w`: the matrix coefficient is reconstructed, shifted by
/// the exact substitution `x ↦ x − 1` (the poles at `{0, −1}` trade places
/// to `{1, 0}`), and re-expanded at `0`.
///
/// Only certified functionals are accepted: without the pole certificate
/// the shifted re-expansion is an infinite sum and the operation is not
/// defined on plain tables.
///
/// # Errors
///
/// Inhomogeneous `v`; certificate violations from the reconstruction.
pub fn yl_mode_eval(
    f: &CertifiedFunctional,
    v: &StateVector,
    m: i64,
    w: &StateVector,
) -> Result<Vec<Scalar>, RegrepError> {
    if v.is_zero() || w.is_zero() {
        return Ok(vec![Scalar::zero(); f.dim()]);
    }
    let rats = matrix_coeff_all(f, v, w)?;
    let target = -m - 1;
    let z = z_point();
    rats.iter()
        .map(|rat| {
            let shifted = rat.shift_substitute(&z)?;
            expansion_coeff_at_zero(&shifted, target)
        })
        .collect()
}

/// Verifies the three-term residue identity over a rectangular window of
/// powers: for every `(p, q)` in `window × window` and every coordinate,
/// the coefficient of `x₀^{-p-1} x^{-q-1}` must satisfy
///
/// ```text
/// [upper series against (x−z)/x₀ delta]  −  [right action against (z−x)/(−x₀) delta]
///     =  [left action against (x−x₀)/z delta].
/// ```
///
/// Each of the three terms is a finite sum: the first truncates at the top
/// of the upper series, the other two at the pole floors of the two
/// re-expansions.
///
/// # Errors
///
/// [`RegrepError::CheckFailed`] reports the first mismatching `(p, q)` cell.
pub fn jacobi_window_check(
    f: &CertifiedFunctional,
    v: &StateVector,
    w: &StateVector,
    window: (i64, i64),
) -> Result<(), RegrepError> {
    let (w_lo, w_hi) = window;
    if v.is_zero() || w.is_zero() || w_lo > w_hi {
        return Ok(());
    }
    let v_weight = homogeneous_weight(v)?;
    let (std_lo, hi, l, degree_bound) = standard_window(f, v_weight, w);
    let z = z_point();

    // The first term reads the upper series at q+p+1+i, so reach down to
    // the window floor as well as the reconstruction floor.
    let lo = std_lo.min(2 * w_lo + 1);
    let rows = upper_rows(f, v, w, lo, hi)?;

    for (coord, row) in rows.iter().enumerate() {
        let rat = reconstruct(row, l, degree_bound)?;
        let shifted = rat.shift_substitute(&z)?;
        let t_floor = -(rat.pole_order_at_zero() as i64);
        let u_floor = -(shifted.pole_order_at_zero() as i64);
        let t = rat.iota_zero(t_floor, w_hi.max(t_floor))?;
        let u = shifted.iota_zero(u_floor, w_hi.max(u_floor))?;
        let s_at = |p: i64| -> Scalar {
            if p < lo || p > hi {
                Scalar::zero()
            } else {
                row.coeff(p).expect("inside window")
            }
        };
        let t_at = |p: i64| -> Scalar {
            if p < t_floor {
                Scalar::zero()
            } else {
                t.coeff(p).expect("inside window")
            }
        };
        let u_at = |p: i64| -> Scalar {
            if p < u_floor {
                Scalar::zero()
            } else {
                u.coeff(p).expect("inside window")
            }
        };

        for p in w_lo..=w_hi {
            for q in w_lo..=w_hi {
                // Σ_i C(−p−1, i) (−z)^i s_{q+p+1+i}, truncated at the series top.
                let mut term1 = Scalar::zero();
                let i_top = hi - (q + p + 1);
                for i in 0..=i_top.max(-1) {
                    if i < 0 {
                        break;
                    }
                    let b = binomial(-p - 1, i as u64);
                    if b.is_zero() {
                        continue;
                    }
                    term1 += b * (-&z).pow(i) * s_at(q + p + 1 + i);
                }
                // (−1)^{p+1} Σ_i C(−p−1, i) z^{−p−1−i} (−1)^i t_{q−i},
                // truncated at the pole floor of the re-expansion at 0.
                let mut term2 = Scalar::zero();
                let sign_p = if (p + 1).rem_euclid(2) == 0 {
                    Scalar::one()
                } else {
                    Scalar::from_int(-1)
                };
                let i_top = q - t_floor;
                for i in 0..=i_top.max(-1) {
                    if i < 0 {
                        break;
                    }
                    let b = binomial(-p - 1, i as u64);
                    if b.is_zero() {
                        continue;
                    }
                    let sign_i = if i % 2 == 0 {
                        Scalar::one()
                    } else {
                        Scalar::from_int(-1)
                    };
                    term2 += sign_p.clone() * b * z.pow(-p - 1 - i) * sign_i * t_at(q - i);
                }
                // Σ_i z^{−q−i−1} C(q+i, i) (−1)^i u_{p−i}, truncated at the
                // pole floor of the shifted re-expansion.
                let mut term3 = Scalar::zero();
                let i_top = p - u_floor;
                for i in 0..=i_top.max(-1) {
                    if i < 0 {
                        break;
                    }
                    let b = binomial(q + i, i as u64);
                    if b.is_zero() {
                        continue;
                    }
                    let sign_i = if i % 2 == 0 {
                        Scalar::one()
                    } else {
                        Scalar::from_int(-1)
                    };
                    term3 += z.pow(-q - i - 1) * b * sign_i * u_at(p - i);
                }

                let lhs = term1 - &term2;
                if lhs != term3 {
                    return Err(RegrepError::CheckFailed {
                        check: "three-term residue identity".into(),
                        detail: format!(
                            "coordinate {coord}, cell (p={p}, q={q}): difference side {lhs}, single side {term3}"
                        ),
                    });
                }
            }
        }
    }
    Ok(())
}
