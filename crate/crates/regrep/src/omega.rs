//! Graded annihilator subspaces of a module, computed level by level as
//! joint kernels of the raising constraints, together with the
//! single-application generated-submodule construction and nilpotency
//! reports for weight-raising modes.

use std::sync::Arc;

use core_linalg::{kernel_basis, SpanHandle, SparseVector};
use voa_core::{mode_act, BasisIndexer, ModuleRealization, StateVector};

use crate::certified::homogeneous_weight;
use crate::error::RegrepError;

/// A computed basis of the level-`n` annihilator candidate
/// `{w : v_{wt v + m} w = 0 for all tested v and all m ≥ n}` within a level
/// window.
///
/// The space is a *candidate*: it is cut out by the constraints from
/// homogeneous generators of weight at most `generator_bound`, so it
/// contains the true annihilator restricted to the window and shrinks
/// toward it as the bound grows.
#[derive(Debug)]
pub struct OmegaBasis {
    n: i64,
    level_cutoff: i64,
    generator_bound: i64,
    levels: Vec<Vec<StateVector>>,
    indexer: BasisIndexer,
    span: SpanHandle,
}

impl OmegaBasis {
    /// The annihilation level `n`.
    pub fn n(&self) -> i64 {
        self.n
    }

    /// The level window `[0, level_cutoff]` the basis was computed on.
    pub fn level_cutoff(&self) -> i64 {
        self.level_cutoff
    }

    /// The weight bound on tested constraint generators.
    pub fn generator_bound(&self) -> i64 {
        self.generator_bound
    }

    /// Dimensions per level, `0..=level_cutoff`.
    pub fn dims(&self) -> Vec<usize> {
        self.levels.iter().map(Vec::len).collect()
    }

    /// The computed basis of the candidate space at one level.
    pub fn level_basis(&self, level: i64) -> &[StateVector] {
        &self.levels[level as usize]
    }

    /// All basis vectors, ascending in level.
    pub fn members(&self) -> impl Iterator<Item = &StateVector> {
        self.levels.iter().flatten()
    }

    /// Whether a vector (supported within the level window) lies in the
    /// computed candidate space.
    ///
    /// # Errors
    ///
    /// Vectors reaching beyond the window cannot be decided and are
    /// refused.
    pub fn contains(&self, w: &StateVector) -> Result<bool, RegrepError> {
        let sparse = self.indexer.to_sparse(w)?;
        Ok(self.span.contains(&sparse)?)
    }
}

/// Computes the level-`n` annihilator candidate of `W` within levels
/// `0..=level_cutoff`.
///
/// At each level `ℓ` the constraints are the maps `w ↦ v_{wt v + m} w` for
/// homogeneous basis `v` of weight `0..=generator_bound` (the weight-zero
/// vacuum included: its only nonzero mode is the identity, which makes the
/// candidate spaces collapse to zero for `n ≤ -1`) and all `m ≥ n` with a
/// target level in range (`m ≤ ℓ - 1` suffices for `n ≥ 0`; negative `m`
/// raise the level and are included for negative `n`).  The kernel is
/// computed exactly.
pub fn omega_n_basis(
    r: &Arc<ModuleRealization>,
    n: i64,
    level_cutoff: i64,
    generator_bound: i64,
) -> Result<OmegaBasis, RegrepError> {
    let target_cutoff = level_cutoff + (-n).max(0);
    let target_indexer = BasisIndexer::for_module(r, target_cutoff);
    let indexer = BasisIndexer::for_module(r, level_cutoff);
    let mut span = SpanHandle::new(indexer.len());
    let mut levels = Vec::with_capacity(level_cutoff as usize + 1);

    for level in 0..=level_cutoff {
        let source = r.basis_at_level(level);
        if source.is_empty() {
            levels.push(Vec::new());
            continue;
        }
        let mut rows: Vec<SparseVector> = Vec::new();
        for wv in 0..=generator_bound {
            for v_state in r.algebra_basis_at_level(wv) {
                let v = StateVector::from_state(v_state);
                for m in n..=(level - 1) {
                    let target_level = level - m - 1;
                    if target_level < 0 || target_level > target_cutoff {
                        continue;
                    }
                    // One row per target coordinate: transpose the images.
                    let mut images: Vec<SparseVector> = Vec::with_capacity(source.len());
                    for s in &source {
                        let img = mode_act(r, &v, wv + m, &StateVector::from_state(s.clone()))?;
                        images.push(target_indexer.to_sparse(&img)?);
                    }
                    let mut touched: Vec<usize> = images
                        .iter()
                        .flat_map(|img| img.iter().map(|(t, _)| t))
                        .collect();
                    touched.sort_unstable();
                    touched.dedup();
                    for t in touched {
                        let row = SparseVector::from_entries(
                            images
                                .iter()
                                .enumerate()
                                .map(|(j, img)| (j, img.coeff(t)))
                                .filter(|(_, c)| !c.is_zero()),
                        );
                        rows.push(row);
                    }
                }
            }
        }
        let kernel = kernel_basis(&rows, source.len())?;
        let mut basis = Vec::with_capacity(kernel.len());
        for k in kernel {
            let mut w = StateVector::zero();
            for (j, c) in k.iter() {
                w.add_term(source[j].clone(), c.clone());
            }
            span.push(indexer.to_sparse(&w)?)?;
            basis.push(w);
        }
        levels.push(basis);
    }

    Ok(OmegaBasis {
        n,
        level_cutoff,
        generator_bound,
        levels,
        indexer,
        span,
    })
}

/// The outcome of repeatedly applying one mode to the members of a computed
/// annihilator basis.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NilpotencyReport {
    /// The power that was tested.
    pub power: usize,
    /// Whether `power` applications kill every basis member.
    pub all_zero: bool,
    /// Per member: the smallest number of applications that reached zero,
    /// or `None` if still nonzero after `power` applications.
    pub kill_depths: Vec<Option<usize>>,
    /// A member index still surviving at full power, if any.
    pub witness: Option<usize>,
}

/// Applies the single mode `v_m` up to `power` times to every member of the
/// computed basis and reports exactly which iterate reaches zero.
///
/// # Errors
///
/// `v` must be homogeneous.
pub fn nilpotency_check(
    r: &Arc<ModuleRealization>,
    basis: &OmegaBasis,
    v: &StateVector,
    m: i64,
    power: usize,
) -> Result<NilpotencyReport, RegrepError> {
    homogeneous_weight(v)?;
    let mut kill_depths = Vec::new();
    let mut witness = None;
    for (idx, w) in basis.members().enumerate() {
        let mut cur = w.clone();
        let mut depth = None;
        for step in 0..=power {
            if cur.is_zero() {
                depth = Some(step);
                break;
            }
            if step == power {
                break;
            }
            cur = mode_act(r, v, m, &cur)?;
        }
        if depth.is_none() {
            witness.get_or_insert(idx);
        }
        kill_depths.push(depth);
    }
    Ok(NilpotencyReport {
        power,
        all_zero: witness.is_none(),
        kill_depths,
        witness,
    })
}

/// Verifies the graded shift of annihilator candidates under a single mode:
/// every image `u_m b` of a basis member `b` that stays within the target's
/// level window must lie in the target candidate space.
///
/// # Errors
///
/// [`RegrepError::CheckFailed`] names the first escaping member.
pub fn omega_shift_check(
    r: &Arc<ModuleRealization>,
    basis: &OmegaBasis,
    target: &OmegaBasis,
    u: &StateVector,
    m: i64,
) -> Result<(), RegrepError> {
    let wu = homogeneous_weight(u)?;
    for (idx, b) in basis.members().enumerate() {
        let level = b.level().unwrap_or(0);
        if level + wu - m - 1 > target.level_cutoff() {
            continue;
        }
        let img = mode_act(r, u, m, b)?;
        if img.is_zero() {
            continue;
        }
        if !target.contains(&img)? {
            return Err(RegrepError::CheckFailed {
                check: "graded shift of annihilator candidates".into(),
                detail: format!(
                    "member {idx} at level {level}: mode {m} image escapes the level-{} candidate space",
                    target.n()
                ),
            });
        }
    }
    Ok(())
}

/// The span of single-mode images of the seed vectors, graded by level.
#[derive(Debug)]
pub struct GeneratedSubmodule {
    level_cutoff: i64,
    levels: Vec<Vec<StateVector>>,
    indexer: BasisIndexer,
    span: SpanHandle,
    second_pass_stable: bool,
}

impl GeneratedSubmodule {
    /// The level window `[0, level_cutoff]`.
    pub fn level_cutoff(&self) -> i64 {
        self.level_cutoff
    }

    /// Dimensions per level, `0..=level_cutoff`.
    pub fn dims(&self) -> Vec<usize> {
        self.levels.iter().map(Vec::len).collect()
    }

    /// The computed basis at one level.
    pub fn level_basis(&self, level: i64) -> &[StateVector] {
        &self.levels[level as usize]
    }

    /// Whether re-applying every single mode to the computed basis stayed
    /// inside the span — the verification pass of the single-application
    /// property.
    pub fn second_pass_stable(&self) -> bool {
        self.second_pass_stable
    }

    /// Whether a vector lies in the computed span.
    pub fn contains(&self, w: &StateVector) -> Result<bool, RegrepError> {
        let sparse = self.indexer.to_sparse(w)?;
        Ok(self.span.contains(&sparse)?)
    }
}

/// The submodule generated by the seeds within levels `0..=level_cutoff`,
/// built by a *single* application of the modes `v_m` for homogeneous basis
/// `v` of weight `0..=v_weight_budget` (the weight-zero vacuum's identity
/// mode contributes the seeds themselves).
///
/// A second application pass re-applies every mode to the computed basis
/// and records whether anything escaped; on lowest-weight modules it must
/// not, and [`GeneratedSubmodule::second_pass_stable`] reports the outcome.
///
/// # Errors
///
/// Seeds must be homogeneous.
pub fn generated_submodule(
    r: &Arc<ModuleRealization>,
    seeds: &[StateVector],
    level_cutoff: i64,
    v_weight_budget: i64,
) -> Result<GeneratedSubmodule, RegrepError> {
    let indexer = BasisIndexer::for_module(r, level_cutoff);
    let mut span = SpanHandle::new(indexer.len());
    let mut by_level: Vec<Vec<SparseVector>> = vec![Vec::new(); level_cutoff as usize + 1];

    for seed in seeds {
        apply_all_modes(r, &indexer, &mut span, &mut by_level, level_cutoff, v_weight_budget, seed)?;
    }

    // Verification pass: modes applied to the computed basis must stay in
    // the span.
    let basis_vectors: Vec<StateVector> = by_level
        .iter()
        .flatten()
        .map(|sv| indexer.from_sparse(sv))
        .collect();
    let rank_before = span.rank();
    for b in &basis_vectors {
        apply_all_modes(r, &indexer, &mut span, &mut by_level, level_cutoff, v_weight_budget, b)?;
    }
    let second_pass_stable = span.rank() == rank_before;

    let levels = by_level
        .iter()
        .map(|svs| svs.iter().map(|sv| indexer.from_sparse(sv)).collect())
        .collect();

    Ok(GeneratedSubmodule {
        level_cutoff,
        levels,
        indexer,
        span,
        second_pass_stable,
    })
}

/// Applies every mode of every homogeneous generator up to the weight
/// budget (the weight-zero vacuum included, whose identity mode re-inserts
/// the seed itself) and records the surviving images level by level.
#[allow(clippy::too_many_arguments)]
fn apply_all_modes(
    r: &Arc<ModuleRealization>,
    indexer: &BasisIndexer,
    span: &mut SpanHandle,
    by_level: &mut [Vec<SparseVector>],
    level_cutoff: i64,
    v_weight_budget: i64,
    seed: &StateVector,
) -> Result<(), RegrepError> {
    let seed_level = match seed.level() {
        Some(l) => l,
        None if seed.is_zero() => return Ok(()),
        None => {
            return Err(RegrepError::InhomogeneousInput {
                weights: seed.levels_present(),
            })
        }
    };
    for wv in 0..=v_weight_budget {
        for v_state in r.algebra_basis_at_level(wv) {
            let v = StateVector::from_state(v_state);
            // Image level of mode `m` is `seed_level + wv - m - 1`; keep it
            // within the window.
            let m_lo = seed_level + wv - 1 - level_cutoff;
            let m_hi = seed_level + wv - 1;
            for m in m_lo..=m_hi {
                let img = mode_act(r, &v, m, seed)?;
                if img.is_zero() {
                    continue;
                }
                let level = img.level().expect("homogeneous by construction");
                if level > level_cutoff {
                    continue;
                }
                let sparse = indexer.to_sparse(&img)?;
                if span.push(sparse.clone())? {
                    by_level[level as usize].push(sparse);
                }
            }
        }
    }
    Ok(())
}
