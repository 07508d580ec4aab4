//! Reduction spans: explicit generating sets for the congruence ideals the
//! level-`n` quotients divide by, realized as row-echelon spans inside a
//! weight-truncated ambient space.
//!
//! Membership verdicts are one-sided by design. The generating family is
//! infinite, so any finite span is an under-approximation: a vector found in
//! the span is certainly congruent to zero, while a vector not found is only
//! `Inconclusive` at the current cutoff. Enlarging the cutoff (and the
//! enumeration patience) can upgrade the verdict, never downgrade it.

use std::sync::Arc;

use core_linalg::SpanHandle;
use voa_core::{BasisIndexer, ModuleRealization, StateVector};

use crate::error::AnError;
use crate::products::{generalized_product, translate_image};

/// Which congruence ideal a span generates.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SpanVariant {
    /// The two-sided ideal inside the algebra acting on itself: annihilation
    /// products plus the translate images `L(-1)v + L(0)v`.
    AlgebraIdeal,
    /// The plain annihilation span of a module, without translate images.
    /// The quotient by this span still carries the weight grading.
    ModuleBare,
    /// The full module span: annihilation products plus translate images,
    /// collapsing the grading to a filtration.
    ModuleFull,
}

impl SpanVariant {
    fn includes_translates(self) -> bool {
        matches!(self, SpanVariant::AlgebraIdeal | SpanVariant::ModuleFull)
    }
}

/// Tuning for span construction.
#[derive(Debug, Clone)]
pub struct SpanParams {
    /// How far the sharpened product family is enumerated beyond the plain
    /// annihilation products (the `r` parameter of
    /// [`generalized_product`](crate::products::generalized_product) runs
    /// over `0..=slack`).
    pub slack: i64,
    /// Per-top-weight enumeration budget: once this many consecutive pushes
    /// fail to raise the rank, the enumeration moves to the next top weight.
    /// Small cutoffs are enumerated exhaustively in practice because the
    /// budget exceeds the number of candidate pairs.
    pub patience: usize,
}

impl Default for SpanParams {
    fn default() -> Self {
        SpanParams {
            slack: 4,
            patience: 48,
        }
    }
}

/// A built reduction span: the ambient indexer up to the cutoff together
/// with the row-echelon span of the enumerated ideal generators.
#[derive(Debug, Clone)]
pub struct AnContext {
    pub(crate) realization: Arc<ModuleRealization>,
    pub(crate) n: i64,
    pub(crate) cutoff: i64,
    pub(crate) variant: SpanVariant,
    pub(crate) indexer: BasisIndexer,
    pub(crate) span: SpanHandle,
}

/// Outcome of a congruence test modulo a reduction span.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Verdict {
    /// The difference lies in the span: the two vectors are certainly
    /// congruent.
    Congruent,
    /// The difference was not captured at this cutoff. This does **not**
    /// certify non-congruence; a larger cutoff may still succeed.
    Inconclusive { cutoff: i64 },
}

impl Verdict {
    /// `true` for [`Verdict::Congruent`].
    pub fn is_congruent(&self) -> bool {
        matches!(self, Verdict::Congruent)
    }
}

/// Enumerates the ideal generators up to the cutoff and assembles their
/// span.
///
/// Generators are enumerated in ascending top weight; within one top weight
/// the plain annihilation products come first (`r = 0`), then the sharpened
/// family in ascending `r`, each over basis pairs in ascending algebra
/// weight. A per-top-weight patience budget bounds the enumeration; see
/// [`SpanParams`].
pub fn build_reduction_span(
    realization: Arc<ModuleRealization>,
    n: i64,
    cutoff: i64,
    variant: SpanVariant,
    params: &SpanParams,
) -> Result<AnContext, AnError> {
    if n < 0 {
        return Err(AnError::NegativeLevel { n });
    }
    if variant == SpanVariant::AlgebraIdeal && !realization.is_self_module() {
        return Err(AnError::RequiresSelfModule);
    }
    let indexer = BasisIndexer::for_module(&realization, cutoff);
    let mut span = SpanHandle::new(indexer.len());

    if variant.includes_translates() {
        for lw in 0..cutoff {
            for w_state in realization.basis_at_level(lw) {
                let w = StateVector::from_state(w_state);
                let g = translate_image(&realization, &w)?;
                if !g.is_zero() {
                    span.push(indexer.to_sparse(&g)?)?;
                }
            }
        }
    }

    for top in 0..=cutoff {
        let mut barren = 0usize;
        'this_top: for r in 0..=params.slack {
            let pair_weight = top - 2 * n - 1 - r;
            if pair_weight < 1 {
                continue;
            }
            for s in 0..=r {
                for wv in 1..=pair_weight {
                    let lw = pair_weight - wv;
                    for v_state in realization.algebra_basis_at_level(wv) {
                        let v = StateVector::from_state(v_state);
                        for w_state in realization.basis_at_level(lw) {
                            let w = StateVector::from_state(w_state);
                            let g = generalized_product(&realization, &v, &w, n, r, s)?;
                            if g.is_zero() {
                                continue;
                            }
                            if span.push(indexer.to_sparse(&g)?)? {
                                barren = 0;
                            } else {
                                barren += 1;
                                if barren > params.patience {
                                    break 'this_top;
                                }
                            }
                        }
                    }
                }
            }
        }
    }

    Ok(AnContext {
        realization,
        n,
        cutoff,
        variant,
        indexer,
        span,
    })
}

impl AnContext {
    /// The realization the span was built over.
    pub fn realization(&self) -> &Arc<ModuleRealization> {
        &self.realization
    }

    /// The quotient level index `n`.
    pub fn n(&self) -> i64 {
        self.n
    }

    /// The ambient weight cutoff.
    pub fn cutoff(&self) -> i64 {
        self.cutoff
    }

    /// Which ideal the span generates.
    pub fn variant(&self) -> SpanVariant {
        self.variant
    }

    /// The rank of the span inside the truncated ambient space.
    pub fn span_rank(&self) -> usize {
        self.span.rank()
    }

    /// The canonical remainder of `x` modulo the span: the part of `x` the
    /// enumerated generators cannot absorb. Congruent vectors get equal
    /// remainders.
    pub fn reduce(&self, x: &StateVector) -> Result<StateVector, AnError> {
        let sparse = self.to_sparse_checked(x)?;
        let (rem, _) = self.span.reduce(&sparse)?;
        Ok(self.indexer.from_sparse(&rem))
    }

    /// One-sided congruence of `x` and `y` modulo the span.
    pub fn congruent(&self, x: &StateVector, y: &StateVector) -> Result<Verdict, AnError> {
        let diff = x.sub(y);
        if diff.is_zero() {
            return Ok(Verdict::Congruent);
        }
        let sparse = self.to_sparse_checked(&diff)?;
        if self.span.contains(&sparse)? {
            Ok(Verdict::Congruent)
        } else {
            Ok(Verdict::Inconclusive {
                cutoff: self.cutoff,
            })
        }
    }

    fn to_sparse_checked(
        &self,
        x: &StateVector,
    ) -> Result<core_linalg::SparseVector, AnError> {
        if let Some(&level) = x.levels_present().iter().max() {
            if level > self.cutoff {
                return Err(AnError::SupportExceedsCutoff {
                    level,
                    cutoff: self.cutoff,
                });
            }
        }
        Ok(self.indexer.to_sparse(x)?)
    }
}

/// Congruence with automatic escalation: starts just above the support of
/// the difference and retries with the cutoff raised by two (and the
/// enumeration patience doubled) until the verdict is congruent or the
/// attempts are exhausted.
pub fn congruent_mod_span_auto(
    realization: &Arc<ModuleRealization>,
    n: i64,
    variant: SpanVariant,
    x: &StateVector,
    y: &StateVector,
) -> Result<Verdict, AnError> {
    congruent_mod_span_auto_with(realization, n, variant, x, y, &SpanParams::default(), 3)
}

/// [`congruent_mod_span_auto`] with explicit tuning and attempt count.
pub fn congruent_mod_span_auto_with(
    realization: &Arc<ModuleRealization>,
    n: i64,
    variant: SpanVariant,
    x: &StateVector,
    y: &StateVector,
    params: &SpanParams,
    attempts: usize,
) -> Result<Verdict, AnError> {
    let diff = x.sub(y);
    if diff.is_zero() {
        return Ok(Verdict::Congruent);
    }
    let top = diff.levels_present().into_iter().max().unwrap_or(0);
    let mut cutoff = top + 2;
    let mut tuned = params.clone();
    let mut last = Verdict::Inconclusive { cutoff: top };
    for _ in 0..attempts.max(1) {
        let ctx = build_reduction_span(realization.clone(), n, cutoff, variant, &tuned)?;
        match ctx.congruent(x, y)? {
            Verdict::Congruent => return Ok(Verdict::Congruent),
            v @ Verdict::Inconclusive { .. } => last = v,
        }
        cutoff += 2;
        tuned.patience *= 2;
    }
    Ok(last)
}
