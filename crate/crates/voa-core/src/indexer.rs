//! Global indexing of basis states up to a degree cutoff, for interop with
//! the sparse linear algebra layer.

use std::collections::HashMap;

use core_linalg::SparseVector;

use crate::error::VoaError;
use crate::realization::ModuleRealization;
use crate::state::{BasisState, StateVector};

/// A fixed enumeration of all basis states of degree `<= max_level`,
/// ascending in degree and deterministic within each degree, with inverse
/// lookup.  Converts between [`StateVector`]s and indexed sparse vectors.
#[derive(Debug, Clone)]
pub struct BasisIndexer {
    states: Vec<BasisState>,
    index: HashMap<BasisState, usize>,
    level_start: Vec<usize>,
    max_level: i64,
}

impl BasisIndexer {
    /// Indexes the module basis of `r` through `max_level`.
    pub fn for_module(r: &ModuleRealization, max_level: i64) -> Self {
        Self::build(max_level, |l| r.basis_at_level(l))
    }

    /// Indexes the acting algebra's basis through `max_level`.
    pub fn for_algebra(r: &ModuleRealization, max_level: i64) -> Self {
        Self::build(max_level, |l| r.algebra_basis_at_level(l))
    }

    fn build(max_level: i64, basis_at: impl Fn(i64) -> Vec<BasisState>) -> Self {
        assert!(max_level >= 0, "cutoff must be nonnegative");
        let mut states = Vec::new();
        let mut level_start = Vec::new();
        for l in 0..=max_level {
            level_start.push(states.len());
            states.extend(basis_at(l));
        }
        level_start.push(states.len());
        let index = states
            .iter()
            .enumerate()
            .map(|(i, s)| (s.clone(), i))
            .collect();
        BasisIndexer {
            states,
            index,
            level_start,
            max_level,
        }
    }

    /// Total number of indexed states.
    pub fn len(&self) -> usize {
        self.states.len()
    }

    /// True when nothing is indexed (never happens for `max_level >= 0`).
    pub fn is_empty(&self) -> bool {
        self.states.is_empty()
    }

    /// The degree cutoff, inclusive.
    pub fn max_level(&self) -> i64 {
        self.max_level
    }

    /// All indexed states in order.
    pub fn states(&self) -> &[BasisState] {
        &self.states
    }

    /// The state at position `i`.
    pub fn state_at(&self, i: usize) -> &BasisState {
        &self.states[i]
    }

    /// Position of `s`, if indexed.
    pub fn index_of(&self, s: &BasisState) -> Option<usize> {
        self.index.get(s).copied()
    }

    /// The index range holding the states of degree `level`.
    pub fn range_at_level(&self, level: i64) -> std::ops::Range<usize> {
        if level < 0 || level > self.max_level {
            return 0..0;
        }
        let l = level as usize;
        self.level_start[l]..self.level_start[l + 1]
    }

    /// Converts a vector to indexed coordinates; errors when a term exceeds
    /// the cutoff.
    pub fn to_sparse(&self, v: &StateVector) -> Result<SparseVector, VoaError> {
        let mut entries = Vec::with_capacity(v.num_terms());
        for (s, c) in v.iter() {
            match self.index_of(s) {
                Some(i) => entries.push((i, c.clone())),
                None => {
                    return Err(VoaError::LevelBeyondCutoff {
                        level: s.level(),
                        cutoff: self.max_level,
                    })
                }
            }
        }
        Ok(SparseVector::from_entries(entries))
    }

    /// Reads a vector back from indexed coordinates.
    pub fn from_sparse(&self, sv: &SparseVector) -> StateVector {
        sv.iter()
            .map(|(i, c)| (self.states[i].clone(), c.clone()))
            .collect()
    }
}
