//! Induction from a finite-dimensional module over a level-`n` quotient
//! algebra to a graded module of functionals, realized concretely: each
//! layer is spanned by left-action mode images of the class-seeded
//! functionals, and its dimension is measured as a rank over probe states.

use std::sync::Arc;

use core_linalg::{Scalar, SpanHandle, SparseVector};
use voa_core::StateVector;

use crate::action::AnAction;
use crate::actions::CERT_WINDOW_SLACK;
use crate::bimodule::sigma_functional;
use crate::certified::{ActionSide, CertifiedFunctional};
use crate::error::RegrepError;

/// Tuning knobs for [`induce_with`].
#[derive(Debug, Clone)]
pub struct InduceParams {
    /// Weight bound on the homogeneous vectors whose left-action modes
    /// generate the layers.  Defaults to `generator_weight · (K + 2n)`,
    /// the weight at which the generating vectors reach every monomial
    /// width occurring in layers up to `K`.
    pub v_weight_budget: Option<i64>,
    /// Probe states up to this level witness the layer ranks.  Defaults to
    /// `max(K + n, 2)`.
    pub probe_level: Option<i64>,
    /// Restrict probe states to at most this many generator factors.  The
    /// factor count of a window state is bounded by the factor counts of
    /// the generating vector and the probe combined, so narrow probes keep
    /// class reduction inside a shallower table; rank is then witnessed by
    /// fewer states, which stays exact as long as the probes separate the
    /// layer (generic parameters).  `None` admits every basis state.
    pub probe_width: Option<usize>,
    /// How far below the lowest admissible layer to verify vanishing.
    pub below_depth: i64,
}

impl Default for InduceParams {
    fn default() -> Self {
        InduceParams {
            v_weight_budget: None,
            probe_level: None,
            probe_width: None,
            below_depth: 2,
        }
    }
}

/// The graded skeleton of an induced module, measured through probe-state
/// ranks.
///
/// Layer `k` collects the degree-`k` functionals (conformal weight
/// `lowest_weight + k`).  Layers down to `-n` may be nonzero; the
/// construction additionally computes layers below `-n` and records in
/// `support_bound_ok` whether they vanish as the lower truncation demands.
#[derive(Debug, Clone)]
pub struct InducedModuleResult {
    /// Quotient level of the inducing algebra.
    pub n: i64,
    /// Highest computed layer.
    pub level_cutoff: i64,
    /// Dimension of the inducing module.
    pub u_dim: usize,
    /// Scalar by which the conformal class acts on the inducing module.
    pub lowest_weight: Scalar,
    /// Measured dimensions of layers `0..=level_cutoff`.
    pub dims: Vec<usize>,
    /// Measured dimensions of layers `-n - below_depth ..= -1`, ascending
    /// in layer.
    pub below: Vec<(i64, usize)>,
    /// Whether every computed layer strictly below `-n` vanished.
    pub support_bound_ok: bool,
}

/// Induces a graded module from `action` with default parameters; see
/// [`induce_with`].
pub fn induce(action: &Arc<AnAction>, level_cutoff: i64) -> Result<InducedModuleResult, RegrepError> {
    induce_with(action, level_cutoff, &InduceParams::default())
}

/// Induces a graded module of functionals from a finite-dimensional module
/// over the level-`n` quotient algebra.
///
/// Each basis vector of the module seeds a functional that evaluates
/// through class reduction; for `n ≥ 1` the seeds are composed with the
/// weight-lowering exponential twist so the two one-sided actions agree on
/// them.  Layer `k` is then spanned by the left-action modes
/// `v_{wt v - 1 - k}` of homogeneous `v` up to the weight budget applied to
/// the seeds, and its dimension is the rank of those functionals evaluated
/// on all probe states.  Ranks measured this way never exceed the true
/// layer dimensions.
///
/// The evaluation windows reach probe level `P + wt v + 2n +` slack (plus
/// a ladder term for `n ≥ 1`), which bounds the required table cutoff
/// mechanically; a pre-check reports the cutoff needed.  Beyond that, the
/// window states must *class-reduce*: every state fed to a seed must have
/// its class inside the table, which for a single-generator quotient means
/// the cutoff must cover `generator_weight ·` (the maximal factor count of
/// a window state, at most the factor counts of the budget and probe
/// levels combined).  A too-shallow table surfaces as a reduction-escape
/// error naming the required cutoff.
///
/// # Errors
///
/// [`RegrepError::InconsistentAction`] if the conformal class does not act
/// as a scalar (the induced module would not be graded).
pub fn induce_with(
    action: &Arc<AnAction>,
    level_cutoff: i64,
    params: &InduceParams,
) -> Result<InducedModuleResult, RegrepError> {
    let table = action.table();
    let r = table.realization().clone();
    let n = table.n();
    let u_dim = action.dim();
    let below_lo = -n - params.below_depth.max(0);
    let below_range: Vec<i64> = (below_lo..=-1).collect();

    if u_dim == 0 {
        return Ok(InducedModuleResult {
            n,
            level_cutoff,
            u_dim,
            lowest_weight: Scalar::zero(),
            dims: vec![0; level_cutoff as usize + 1],
            below: below_range.into_iter().map(|k| (k, 0)).collect(),
            support_bound_ok: true,
        });
    }

    let lowest_weight = action.scalar_of_class(table.omega_class()).ok_or_else(|| {
        RegrepError::InconsistentAction {
            detail: "the conformal class must act as a scalar to grade the induced module".into(),
        }
    })?;

    let v_weight_budget = params
        .v_weight_budget
        .unwrap_or(r.algebra().generator_weight() * (level_cutoff + 2 * n));
    let probe_level = params.probe_level.unwrap_or((level_cutoff + n).max(2));
    // Deepest class evaluation: the layer windows reach
    // `P + budget + 2n + slack`, and for n ≥ 1 each node of the twist
    // ladder (at most 2n of them) adds another window of depth
    // `2 + 2n + slack`.
    let ladder = if n >= 1 {
        2 * n * (2 + 2 * n + CERT_WINDOW_SLACK)
    } else {
        0
    };
    let deepest = probe_level + v_weight_budget + 2 * n + CERT_WINDOW_SLACK + ladder;
    // Reduction of a level-`d` state needs the annihilation span complete
    // at level `d`, i.e. internal cutoff `2·D + 2n ≥ deepest`.
    let needed_depth = (deepest - 2 * n).div_euclid(2) + (deepest - 2 * n).rem_euclid(2);
    // Every window state factors into at most (budget factors) + (probe
    // factors) + (one conformal factor per twist-ladder node) generator
    // modes, and a factor-count-`w` class touches representatives up to
    // weight `generator_weight · w`, which the table cutoff must cover.
    let min_part = i64::from(r.algebra().min_part_self());
    let gen_weight = r.algebra().generator_weight();
    let budget_width = v_weight_budget / min_part;
    let probe_cap = probe_level.max(0) / min_part;
    let probe_width = match params.probe_width {
        Some(wcap) => probe_cap.min(wcap as i64),
        None => probe_cap,
    };
    let ladder_width = if n >= 1 { 2 * n } else { 0 };
    let needed_class = gen_weight * (budget_width + probe_width + ladder_width);
    let needed = needed_depth.max(needed_class);
    if table.cutoff() < needed {
        return Err(RegrepError::InconsistentAction {
            detail: format!(
                "table cutoff {} cannot window probe level {} with weight budget {}; rebuild with cutoff ≥ {}",
                table.cutoff(),
                probe_level,
                v_weight_budget,
                needed
            ),
        });
    }

    // Seed functionals: one per basis vector of the module, twisted for
    // n ≥ 1 so left and right modes grade them consistently.
    let mut seeds: Vec<Arc<CertifiedFunctional>> = Vec::with_capacity(u_dim);
    for j in 0..u_dim {
        let mut coords = vec![Scalar::zero(); u_dim];
        coords[j] = Scalar::one();
        let base = Arc::new(CertifiedFunctional::class_seed(action.clone(), coords)?);
        let seed = if n >= 1 {
            Arc::new(sigma_functional(&base, &Scalar::one())?)
        } else {
            base
        };
        seeds.push(seed);
    }

    // Probe states, flattened over (state, coordinate).
    let mut probes: Vec<StateVector> = Vec::new();
    for level in 0..=probe_level {
        for s in r.basis_at_level(level) {
            if let Some(wcap) = params.probe_width {
                if s.parts().len() > wcap {
                    continue;
                }
            }
            probes.push(StateVector::from_state(s));
        }
    }
    let ambient = probes.len() * u_dim;

    let layer_dim = |k: i64| -> Result<usize, RegrepError> {
        let mut span = SpanHandle::new(ambient);
        let mut push_functional = |g: &CertifiedFunctional| -> Result<(), RegrepError> {
            let mut row = SparseVector::zero();
            for (pi, w) in probes.iter().enumerate() {
                let vals = g.eval_vector(w)?;
                for (ci, val) in vals.into_iter().enumerate() {
                    if !val.is_zero() {
                        row.set(pi * u_dim + ci, val);
                    }
                }
            }
            span.push(row)?;
            Ok(())
        };
        for seed in &seeds {
            if k == 0 {
                push_functional(seed)?;
            }
            for wv in 1..=v_weight_budget {
                for v_state in r.algebra_basis_at_level(wv) {
                    let v = StateVector::from_state(v_state);
                    let g =
                        CertifiedFunctional::mode_image(ActionSide::Left, &v, wv - 1 - k, seed)?;
                    push_functional(&g)?;
                }
            }
        }
        Ok(span.rank())
    };

    let mut dims = Vec::with_capacity(level_cutoff as usize + 1);
    for k in 0..=level_cutoff {
        dims.push(layer_dim(k)?);
    }
    let mut below = Vec::with_capacity(below_range.len());
    let mut support_bound_ok = true;
    for &k in &below_range {
        let d = layer_dim(k)?;
        if k < -n && d != 0 {
            support_bound_ok = false;
        }
        below.push((k, d));
    }

    Ok(InducedModuleResult {
        n,
        level_cutoff,
        u_dim,
        lowest_weight,
        dims,
        below,
        support_bound_ok,
    })
}
