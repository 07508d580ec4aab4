//! Finite multiplication tables for the level-`n` quotient algebras.
//!
//! A table fixes a weight cutoff `D`, selects representative basis states of
//! weight ≤ `D` that are independent modulo the congruence ideal, and
//! records the quotient product of every representative pair as a
//! combination of representatives. Products of representatives of weight
//! ≤ `D` reach weight `2D + 2n`, so reductions happen inside an internal
//! ambient space at that larger cutoff; products whose reduction genuinely
//! needs representatives beyond `D` are recorded as such rather than
//! truncated.

use std::collections::HashMap;
use std::sync::Arc;

use core_linalg::{Membership, Scalar};
use voa_core::{theta_apply, BasisState, ModuleRealization, StateVector};

use crate::error::AnError;
use crate::products::{star_product, star_product_right};
use crate::span::{build_reduction_span, AnContext, SpanParams, SpanVariant};

/// A vector in the quotient algebra, as `(representative index, coefficient)`
/// pairs sorted by index.
pub type ClassVector = Vec<(usize, Scalar)>;

/// The recorded product of two representatives.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ProductEntry {
    /// The product reduces to a combination of table representatives.
    Reduced(ClassVector),
    /// The reduction involves a representative of weight beyond the table
    /// cutoff; rebuilding the table with cutoff ≥ `required` resolves it.
    NeedsCutoff { required: i64 },
}

/// Which side of the quotient bimodule an algebra element acts on.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Side {
    Left,
    Right,
}

/// A finite presentation of a level-`n` quotient algebra at cutoff `D`.
#[derive(Debug)]
pub struct QuotientTable {
    realization: Arc<ModuleRealization>,
    n: i64,
    cutoff: i64,
    internal_cutoff: i64,
    ctx: AnContext,
    /// Number of ideal generators pushed before the representative
    /// candidates; candidate `k` sits at span position `gen_count + k`.
    gen_count: usize,
    /// All representatives inside the internal ambient space, ascending.
    reps_full: Vec<BasisState>,
    /// Map from ambient basis-state index to position in `reps_full`.
    rep_of_state: HashMap<usize, usize>,
    /// How many of `reps_full` have weight ≤ `cutoff`; these form the table
    /// basis.
    rep_count: usize,
    products: Vec<Vec<ProductEntry>>,
    identity: usize,
    omega: ClassVector,
    theta: Vec<ClassVector>,
    filtration_dims: Vec<usize>,
}

/// Builds the quotient table with default span tuning.
pub fn quotient_table(
    realization: &Arc<ModuleRealization>,
    n: i64,
    cutoff: i64,
) -> Result<QuotientTable, AnError> {
    quotient_table_with(realization, n, cutoff, &SpanParams::default())
}

/// Builds the quotient table with explicit span tuning.
pub fn quotient_table_with(
    realization: &Arc<ModuleRealization>,
    n: i64,
    cutoff: i64,
    params: &SpanParams,
) -> Result<QuotientTable, AnError> {
    if n < 0 {
        return Err(AnError::NegativeLevel { n });
    }
    if cutoff < 2 {
        // The conformal class lives at weight 2 and is part of the table.
        return Err(AnError::CutoffInsufficient { required: 2 });
    }
    let internal_cutoff = 2 * cutoff + 2 * n;
    let mut ctx = build_reduction_span(
        realization.clone(),
        n,
        internal_cutoff,
        SpanVariant::AlgebraIdeal,
        params,
    )?;
    let gen_count = ctx.span.num_generators();

    // Complete the span to the whole ambient space with basis-state
    // candidates in ascending filtration order; the rank-raising candidates
    // are the quotient representatives.
    let mut reps_full = Vec::new();
    let mut rep_of_state = HashMap::new();
    for k in 0..ctx.indexer.len() {
        let state = ctx.indexer.state_at(k).clone();
        let unit = core_linalg::SparseVector::unit(k);
        if ctx.span.push(unit)? {
            rep_of_state.insert(k, reps_full.len());
            reps_full.push(state);
        }
    }
    let rep_count = reps_full
        .iter()
        .take_while(|s| s.level() <= cutoff)
        .count();

    let mut table = QuotientTable {
        realization: realization.clone(),
        n,
        cutoff,
        internal_cutoff,
        ctx,
        gen_count,
        reps_full,
        rep_of_state,
        rep_count,
        products: Vec::new(),
        identity: 0,
        omega: Vec::new(),
        theta: Vec::new(),
        filtration_dims: Vec::new(),
    };

    assert!(
        !table.reps_full.is_empty() && table.reps_full[0].is_base(),
        "the vacuum class vanished from the quotient; the reduction span is corrupt"
    );
    table.identity = 0;

    let omega_vec = realization.conformal_vector();
    table.omega = match table.reduce_to_class(&omega_vec)? {
        ProductEntry::Reduced(c) => c,
        ProductEntry::NeedsCutoff { required } => {
            return Err(AnError::ReductionEscapesTable {
                required,
                cutoff,
            })
        }
    };

    for i in 0..table.rep_count {
        let rep = StateVector::from_state(table.reps_full[i].clone());
        let image = theta_apply(realization, &rep)?;
        match table.reduce_to_class(&image)? {
            ProductEntry::Reduced(c) => table.theta.push(c),
            ProductEntry::NeedsCutoff { required } => {
                return Err(AnError::ReductionEscapesTable {
                    required,
                    cutoff,
                })
            }
        }
    }

    for i in 0..table.rep_count {
        let left = StateVector::from_state(table.reps_full[i].clone());
        let mut row = Vec::with_capacity(table.rep_count);
        for j in 0..table.rep_count {
            let right = StateVector::from_state(table.reps_full[j].clone());
            let product = star_product(realization, &left, &right, n)?;
            row.push(table.reduce_to_class(&product)?);
        }
        table.products.push(row);
    }

    table.filtration_dims = (0..=cutoff)
        .map(|l| {
            table.reps_full[..table.rep_count]
                .iter()
                .filter(|s| s.level() <= l)
                .count()
        })
        .collect();

    Ok(table)
}

impl QuotientTable {
    /// The quotient level index `n`.
    pub fn n(&self) -> i64 {
        self.n
    }

    /// The representative weight cutoff `D`.
    pub fn cutoff(&self) -> i64 {
        self.cutoff
    }

    /// The internal ambient cutoff `2D + 2n` used for reductions.
    pub fn internal_cutoff(&self) -> i64 {
        self.internal_cutoff
    }

    /// The realization the table presents.
    pub fn realization(&self) -> &Arc<ModuleRealization> {
        &self.realization
    }

    /// Number of table representatives (weight ≤ cutoff).
    pub fn dim(&self) -> usize {
        self.rep_count
    }

    /// The representative basis states, ascending in weight.
    pub fn reps(&self) -> &[BasisState] {
        &self.reps_full[..self.rep_count]
    }

    /// Cumulative dimension of the quotient filtration: entry `l` counts
    /// representatives of weight ≤ `l`, for `l` in `0..=cutoff`.
    pub fn filtration_dims(&self) -> &[usize] {
        &self.filtration_dims
    }

    /// Index of the class of the vacuum, the multiplicative identity.
    pub fn identity_index(&self) -> usize {
        self.identity
    }

    /// The class of the conformal vector, a central element.
    pub fn omega_class(&self) -> &ClassVector {
        &self.omega
    }

    /// The class of the parity-involution image of representative `i`. The
    /// involution is an anti-automorphism of the quotient product.
    pub fn theta_class(&self, i: usize) -> &ClassVector {
        &self.theta[i]
    }

    /// The recorded product of representatives `i` and `j`.
    pub fn product(&self, i: usize, j: usize) -> &ProductEntry {
        &self.products[i][j]
    }

    /// Lifts a class vector back to a state vector over the representatives.
    pub fn lift(&self, class: &ClassVector) -> StateVector {
        let mut out = StateVector::zero();
        for (i, c) in class {
            out.add_term(self.reps_full[*i].clone(), c.clone());
        }
        out
    }

    /// Reduces an arbitrary vector (supported in weight ≤ the internal
    /// cutoff) to a combination of representatives modulo the ideal span.
    pub fn reduce_to_class(&self, x: &StateVector) -> Result<ProductEntry, AnError> {
        if let Some(&level) = x.levels_present().iter().max() {
            if level > self.internal_cutoff {
                return Err(AnError::SupportExceedsCutoff {
                    level,
                    cutoff: self.internal_cutoff,
                });
            }
        }
        let sparse = self.ctx.indexer.to_sparse(x)?;
        let membership = self.ctx.span.in_span(&sparse)?;
        let coefficients = match membership {
            Membership::Member { coefficients } => coefficients,
            Membership::NotMember { witness_index } => unreachable!(
                "the representative candidates complete the ambient space, \
                 yet coordinate {witness_index} was not absorbed"
            ),
        };
        let mut class: ClassVector = Vec::new();
        let mut required: Option<i64> = None;
        for (pos, c) in coefficients.iter().enumerate().skip(self.gen_count) {
            if c.is_zero() {
                continue;
            }
            let state_index = pos - self.gen_count;
            let rep_index = *self
                .rep_of_state
                .get(&state_index)
                .expect("nonzero coefficient on a dependent candidate");
            if rep_index < self.rep_count {
                class.push((rep_index, c.clone()));
            } else {
                let level = self.reps_full[rep_index].level();
                required = Some(required.map_or(level, |r: i64| r.max(level)));
            }
        }
        match required {
            Some(required) => Ok(ProductEntry::NeedsCutoff { required }),
            None => {
                class.sort_by_key(|(i, _)| *i);
                Ok(ProductEntry::Reduced(class))
            }
        }
    }

    /// Multiplies two class vectors through the table.
    pub fn multiply(&self, x: &ClassVector, y: &ClassVector) -> Result<ClassVector, AnError> {
        let mut acc: HashMap<usize, Scalar> = HashMap::new();
        for (i, a) in x {
            for (j, b) in y {
                match &self.products[*i][*j] {
                    ProductEntry::Reduced(class) => {
                        let ab = a.clone() * b.clone();
                        for (k, c) in class {
                            let entry = acc.entry(*k).or_insert_with(Scalar::zero);
                            *entry += ab.clone() * c.clone();
                        }
                    }
                    ProductEntry::NeedsCutoff { required } => {
                        return Err(AnError::ReductionEscapesTable {
                            required: *required,
                            cutoff: self.cutoff,
                        })
                    }
                }
            }
        }
        let mut out: ClassVector = acc
            .into_iter()
            .filter(|(_, c)| !c.is_zero())
            .collect();
        out.sort_by_key(|(i, _)| *i);
        Ok(out)
    }
}

/// The descending reduction map between consecutive quotient levels: a class
/// at level `n + 1` maps to the class of the same element at level `n`.
///
/// Both tables must present the same realization at the same cutoff.
pub fn descend_class(
    from: &QuotientTable,
    to: &QuotientTable,
    class: &ClassVector,
) -> Result<ClassVector, AnError> {
    if from.n != to.n + 1 {
        return Err(AnError::LevelMismatch {
            expected: to.n + 1,
            got: from.n,
        });
    }
    if from.cutoff != to.cutoff {
        return Err(AnError::CutoffMismatch {
            left: from.cutoff,
            right: to.cutoff,
        });
    }
    if from.realization.algebra() != to.realization.algebra()
        || from.realization.module() != to.realization.module()
    {
        return Err(AnError::RequiresSelfModule);
    }
    let lifted = from.lift(class);
    match to.reduce_to_class(&lifted)? {
        ProductEntry::Reduced(c) => Ok(c),
        ProductEntry::NeedsCutoff { required } => Err(AnError::ReductionEscapesTable {
            required,
            cutoff: to.cutoff,
        }),
    }
}

/// The one-sided quotient-bimodule action of an algebra element on a module
/// vector, returned as the canonical remainder modulo the context's span.
pub fn bimodule_act(
    ctx: &AnContext,
    a: &StateVector,
    w: &StateVector,
    side: Side,
) -> Result<StateVector, AnError> {
    let product = match side {
        Side::Left => star_product(&ctx.realization, a, w, ctx.n)?,
        Side::Right => star_product_right(&ctx.realization, w, a, ctx.n)?,
    };
    ctx.reduce(&product)
}
