//! Functionals carrying an annihilation certificate.
//!
//! A certified functional on a module `W` annihilates the weighted
//! annihilation products `v ∘ₙ w` (and their sharpened variants), so its
//! matrix coefficients against the opposite vertex operator reconstruct to
//! rational functions with poles confined to `{0, -1}`.  That pole
//! certificate is what makes the left action — which re-expands around the
//! shifted point — computable at all; the right action and the identity
//! checks reuse it.
//!
//! Certified functionals are built either by checking a finite-support
//! table against the annihilation span ([`certify_hom_anw`]) or
//! structurally: classes of a quotient-table module act through a fixed
//! coordinate vector ([`CertifiedFunctional::class_seed`]), and certified
//! inputs stay certified under single vertex modes
//! ([`CertifiedFunctional::mode_image`]), linear combination, and the
//! two-sided star action ([`CertifiedFunctional::dual_pair`]).

use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, Mutex};

use anv_alg::{generalized_product, star_product, star_product_right, AnError, ProductEntry};
use core_linalg::{binomial, Scalar};
use voa_core::{theta_apply, y_o_coefficient, AlgebraKind, BasisState, ModuleRealization, StateVector};

use crate::action::AnAction;
use crate::error::RegrepError;
use crate::functional::{axpy_coords, coords_are_zero, Functional};

/// Which of the two commuting vertex actions on functionals a mode is taken
/// in: the left action re-expands around the shifted point, the right action
/// around the origin.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ActionSide {
    Left,
    Right,
}

/// How a certified functional evaluates.
pub(crate) enum EvalRule {
    /// Values read from a finite table.
    Table(Functional),
    /// `w ↦ ρ([w])·u` for a module `ρ` over the quotient table: the value is
    /// the class of `w` acting on a fixed coordinate vector.
    ClassSeed {
        action: Arc<AnAction>,
        coords: Vec<Scalar>,
    },
    /// A single vertex mode of one of the two actions applied to an inner
    /// certified functional.
    ModeImage {
        side: ActionSide,
        v: StateVector,
        m: i64,
        inner: Arc<CertifiedFunctional>,
    },
    /// A finite linear combination of certified functionals.
    Linear(Vec<(Scalar, Arc<CertifiedFunctional>)>),
    /// `w ↦ inner(θ(a₂) ∗ₙ (w ∗ₙ a₁))`: the two-sided star action.
    DualPair {
        a1: StateVector,
        a2: StateVector,
        inner: Arc<CertifiedFunctional>,
    },
}

impl EvalRule {
    fn kind(&self) -> &'static str {
        match self {
            EvalRule::Table(_) => "table",
            EvalRule::ClassSeed { .. } => "class seed",
            EvalRule::ModeImage { .. } => "mode image",
            EvalRule::Linear(_) => "linear combination",
            EvalRule::DualPair { .. } => "two-sided star action",
        }
    }
}

/// A functional on a module together with an annihilation certificate `n`:
/// it vanishes on the level-`n` annihilation span, so for every homogeneous
/// `v` the matrix coefficient `⟨f Y°(v,x) w⟩` is certified to reconstruct
/// with pole orders at most `wt v + n` at both `0` and `-1`.
///
/// Evaluation is memoized per basis state, so repeated window evaluations
/// share work.
pub struct CertifiedFunctional {
    realization: Arc<ModuleRealization>,
    n: i64,
    dim: usize,
    pub(crate) rule: EvalRule,
    memo: Mutex<HashMap<BasisState, Vec<Scalar>>>,
}

impl fmt::Debug for CertifiedFunctional {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("CertifiedFunctional")
            .field("rule", &self.rule.kind())
            .field("n", &self.n)
            .field("dim", &self.dim)
            .finish()
    }
}

/// Weight of a homogeneous nonzero vector, or an error listing the weights
/// present.
pub(crate) fn homogeneous_weight(v: &StateVector) -> Result<i64, RegrepError> {
    v.level().ok_or_else(|| RegrepError::InhomogeneousInput {
        weights: v.levels_present(),
    })
}

impl CertifiedFunctional {
    fn new(
        realization: Arc<ModuleRealization>,
        n: i64,
        dim: usize,
        rule: EvalRule,
    ) -> CertifiedFunctional {
        CertifiedFunctional {
            realization,
            n,
            dim,
            rule,
            memo: Mutex::new(HashMap::new()),
        }
    }

    /// The zero functional (an empty linear combination).
    pub fn zero(realization: Arc<ModuleRealization>, dim: usize) -> CertifiedFunctional {
        CertifiedFunctional::new(realization, 0, dim, EvalRule::Linear(Vec::new()))
    }

    /// Wraps a finite-support table *without* running the annihilation
    /// check.  Sound exactly when the table's support bound is at most `n`:
    /// every annihilation product at level `n` has all of its homogeneous
    /// components at level `n + 1` or above, so such a table vanishes on the
    /// whole span for structural reasons.
    ///
    /// # Errors
    ///
    /// Tables supported above level `n` are refused; use
    /// [`certify_hom_anw`] for those.
    pub fn from_low_support(
        realization: Arc<ModuleRealization>,
        table: Functional,
        n: i64,
    ) -> Result<CertifiedFunctional, RegrepError> {
        if n < 0 {
            return Err(RegrepError::Algebra(AnError::NegativeLevel { n }));
        }
        if table.support_bound() > n {
            return Err(RegrepError::AnnihilationFailure {
                witness: format!(
                    "support bound {} exceeds the certificate level {n}; run the annihilation check",
                    table.support_bound()
                ),
                value: "unchecked".into(),
            });
        }
        let dim = table.dim();
        Ok(CertifiedFunctional::new(
            realization,
            n,
            dim,
            EvalRule::Table(table),
        ))
    }

    /// The functional `w ↦ ρ([w])·u` for a quotient-table module `ρ` and a
    /// coordinate vector `u`.  It factors through the classes, hence kills
    /// the annihilation span by construction and is certified at the table's
    /// level.
    ///
    /// # Errors
    ///
    /// The coordinate vector must match the module dimension.
    pub fn class_seed(
        action: Arc<AnAction>,
        coords: Vec<Scalar>,
    ) -> Result<CertifiedFunctional, RegrepError> {
        if coords.len() != action.dim() {
            return Err(RegrepError::CoordinateDimMismatch {
                expected: action.dim(),
                got: coords.len(),
            });
        }
        let realization = action.table().realization().clone();
        let n = action.table().n();
        let dim = action.dim();
        Ok(CertifiedFunctional::new(
            realization,
            n,
            dim,
            EvalRule::ClassSeed { action, coords },
        ))
    }

    /// A single mode of the left or right vertex action applied to `inner`.
    ///
    /// The certificate degrades in the graded-shift way: a mode `v_m` with
    /// `m ≥ wt v − 1` preserves the certificate, while lower modes raise it
    /// by `wt v − m − 1`.
    ///
    /// # Errors
    ///
    /// `v` must be homogeneous.
    pub fn mode_image(
        side: ActionSide,
        v: &StateVector,
        m: i64,
        inner: &Arc<CertifiedFunctional>,
    ) -> Result<CertifiedFunctional, RegrepError> {
        if v.is_zero() {
            return Ok(CertifiedFunctional::zero(
                inner.realization.clone(),
                inner.dim,
            ));
        }
        let v_weight = homogeneous_weight(v)?;
        let n = inner.n + (v_weight - m - 1).max(0);
        Ok(CertifiedFunctional::new(
            inner.realization.clone(),
            n,
            inner.dim,
            EvalRule::ModeImage {
                side,
                v: v.clone(),
                m,
                inner: inner.clone(),
            },
        ))
    }

    /// A finite linear combination; the certificate is the maximum over the
    /// terms.
    ///
    /// # Errors
    ///
    /// All terms must share the coordinate dimension.
    pub fn linear(
        realization: Arc<ModuleRealization>,
        dim: usize,
        terms: Vec<(Scalar, Arc<CertifiedFunctional>)>,
    ) -> Result<CertifiedFunctional, RegrepError> {
        let mut n = 0i64;
        let mut kept = Vec::with_capacity(terms.len());
        for (c, t) in terms {
            if t.dim != dim {
                return Err(RegrepError::CoordinateSpaceMismatch {
                    left: dim,
                    right: t.dim,
                });
            }
            if c.is_zero() {
                continue;
            }
            n = n.max(t.n);
            kept.push((c, t));
        }
        Ok(CertifiedFunctional::new(
            realization,
            n,
            dim,
            EvalRule::Linear(kept),
        ))
    }

    /// The two-sided star action `w ↦ inner(θ(a₂) ∗ₙ (w ∗ₙ a₁))` at the
    /// inner certificate level; the action descends to the quotient, so the
    /// certificate is preserved.
    pub fn dual_pair(
        a1: &StateVector,
        a2: &StateVector,
        inner: &Arc<CertifiedFunctional>,
    ) -> CertifiedFunctional {
        CertifiedFunctional::new(
            inner.realization.clone(),
            inner.n,
            inner.dim,
            EvalRule::DualPair {
                a1: a1.clone(),
                a2: a2.clone(),
                inner: inner.clone(),
            },
        )
    }

    /// The module the functional lives on.
    pub fn realization(&self) -> &Arc<ModuleRealization> {
        &self.realization
    }

    /// The annihilation certificate `n`.
    pub fn certificate(&self) -> i64 {
        self.n
    }

    /// Number of coordinates of the value space.
    pub fn dim(&self) -> usize {
        self.dim
    }

    /// The value on a single basis state (memoized).
    pub fn eval_state(&self, s: &BasisState) -> Result<Vec<Scalar>, RegrepError> {
        if let Some(hit) = self.memo.lock().expect("memo poisoned").get(s) {
            return Ok(hit.clone());
        }
        let value = self.eval_state_uncached(s)?;
        self.memo
            .lock()
            .expect("memo poisoned")
            .insert(s.clone(), value.clone());
        Ok(value)
    }

    fn eval_state_uncached(&self, s: &BasisState) -> Result<Vec<Scalar>, RegrepError> {
        match &self.rule {
            EvalRule::Table(f) => Ok(f.eval_state(s)),
            EvalRule::ClassSeed { action, coords } => {
                let w = StateVector::from_state(s.clone());
                match action.table().reduce_to_class(&w)? {
                    ProductEntry::Reduced(class) => Ok(action.apply_class(&class, coords)),
                    ProductEntry::NeedsCutoff { required } => {
                        Err(RegrepError::Algebra(AnError::ReductionEscapesTable {
                            required,
                            cutoff: action.table().cutoff(),
                        }))
                    }
                }
            }
            EvalRule::ModeImage { side, v, m, inner } => {
                let w = StateVector::from_state(s.clone());
                match side {
                    ActionSide::Left => crate::actions::yl_mode_eval(inner, v, *m, &w),
                    ActionSide::Right => crate::actions::yr_mode_eval(inner, v, *m, &w),
                }
            }
            EvalRule::Linear(terms) => {
                let mut out = vec![Scalar::zero(); self.dim];
                for (c, t) in terms {
                    let value = t.eval_state(s)?;
                    axpy_coords(&mut out, c, &value);
                }
                Ok(out)
            }
            EvalRule::DualPair { a1, a2, inner } => {
                let r = &self.realization;
                let w = StateVector::from_state(s.clone());
                let right = star_product_right(r, &w, a1, inner.n)?;
                if right.is_zero() {
                    return Ok(vec![Scalar::zero(); self.dim]);
                }
                let theta_a2 = theta_apply(r.self_algebra(), a2)?;
                let full = star_product(r, &theta_a2, &right, inner.n)?;
                inner.eval_vector(&full)
            }
        }
    }

    /// The value on a vector, by linearity.
    pub fn eval_vector(&self, w: &StateVector) -> Result<Vec<Scalar>, RegrepError> {
        let mut out = vec![Scalar::zero(); self.dim];
        for (s, c) in w.iter() {
            let value = self.eval_state(s)?;
            axpy_coords(&mut out, c, &value);
        }
        Ok(out)
    }
}

/// Certifies a finite-support functional as a functional on the level-`n`
/// quotient of the module.
///
/// Two checks run before acceptance:
///
/// 1. **Annihilation.**  Every weighted annihilation product
///    `v ∘ₙ w` (and its sharpened variants) whose support can reach the
///    table — those with `wt w ≤ N − n − 1` for support bound `N` — must
///    evaluate to zero.  Algebra weights are enumerated up to
///    `N + n + 4`, after which higher-weight products repeat the same
///    visible constraints with different binomial weights.
/// 2. **Polynomiality window.**  For the realization's generating vectors,
///    `x^{wt v+n}(x+1)^{wt v+n}·⟨α Y°(v,x) w⟩` must have no negative
///    powers of `x`; every coefficient the support bound makes reachable is
///    checked exactly.
///
/// Tables supported at level `n` or below are certified structurally (no
/// annihilation product reaches them).
///
/// # Errors
///
/// [`RegrepError::AnnihilationFailure`] names a violated spanning element;
/// [`RegrepError::WindowTestFailure`] names the surviving negative power.
pub fn certify_hom_anw(
    realization: &Arc<ModuleRealization>,
    alpha: Functional,
    n: i64,
) -> Result<CertifiedFunctional, RegrepError> {
    if n < 0 {
        return Err(RegrepError::Algebra(AnError::NegativeLevel { n }));
    }
    let support = alpha.support_bound();
    if support <= n {
        let dim = alpha.dim();
        return Ok(CertifiedFunctional::new(
            realization.clone(),
            n,
            dim,
            EvalRule::Table(alpha),
        ));
    }

    // Annihilation: only products with wt w ≤ N − n − 1 have components at
    // level ≤ N (component levels start at wt w + n + 1 + (r − s)).
    let v_bound = support + n + 4;
    let r_slack = 2i64;
    for wt_w in 0..=(support - n - 1) {
        for w_state in realization.basis_at_level(wt_w) {
            let w = StateVector::from_state(w_state.clone());
            for wt_v in 1..=v_bound {
                for v_state in realization.algebra_basis_at_level(wt_v) {
                    let v = StateVector::from_state(v_state.clone());
                    for r in 0..=r_slack {
                        for s in 0..=r {
                            let g = generalized_product(realization, &v, &w, n, r, s)?;
                            if g.is_zero() {
                                continue;
                            }
                            let value = alpha.eval(&g);
                            if !coords_are_zero(&value) {
                                let witness = if r == 0 {
                                    format!("{v_state:?} ∘_{n} {w_state:?}")
                                } else {
                                    format!("{v_state:?} ∘_{n}[r={r},s={s}] {w_state:?}")
                                };
                                return Err(RegrepError::AnnihilationFailure {
                                    witness,
                                    value: format!("{value:?}"),
                                });
                            }
                        }
                    }
                }
            }
        }
    }

    // Polynomiality window for the generating vectors: the coefficient of
    // x^{-q} (q ≥ 1) in x^l (x+1)^l ⟨α Y°(v,x) w⟩ is
    // Σ_i C(l,i) s_{-q-l-i}, where s_p = α(Y°-coefficient at p); the series
    // vanishes below p = wt w − wt v − N, bounding the sum.
    let mut samples = vec![realization.conformal_vector()];
    if matches!(realization.algebra(), AlgebraKind::Heisenberg) {
        samples.push(realization.boson_vector());
    }
    for v in &samples {
        let h_v = homogeneous_weight(v)?;
        let l = h_v + n;
        for wt_w in 0..=(support - n - 1) {
            let q_max = support - n - wt_w;
            for w_state in realization.basis_at_level(wt_w) {
                let w = StateVector::from_state(w_state.clone());
                for q in 1..=q_max {
                    let mut acc = vec![Scalar::zero(); alpha.dim()];
                    for i in 0..=l {
                        let b = binomial(l, i as u64);
                        if b.is_zero() {
                            continue;
                        }
                        let p = -q - l - i;
                        let y = y_o_coefficient(realization, v, &w, p)?;
                        if y.is_zero() {
                            continue;
                        }
                        axpy_coords(&mut acc, &b, &alpha.eval(&y));
                    }
                    if !coords_are_zero(&acc) {
                        return Err(RegrepError::WindowTestFailure {
                            element: format!("Y°({v:?}, x) {w_state:?}"),
                            power: -q,
                            value: format!("{acc:?}"),
                        });
                    }
                }
            }
        }
    }

    let dim = alpha.dim();
    Ok(CertifiedFunctional::new(
        realization.clone(),
        n,
        dim,
        EvalRule::Table(alpha),
    ))
}
