//! Basis states (descending mode partitions applied to a lowest-weight
//! vector) and exact linear combinations of them.

use std::collections::BTreeMap;
use std::fmt;

use core_linalg::Scalar;
use formal_calc::Payload;

use crate::error::VoaError;

/// A monomial basis state: a descending partition `[m1 >= m2 >= ... >= mk]`
/// encoding the raising-operator word `g(-m1) g(-m2) ... g(-mk)` applied to
/// the distinguished lowest-weight vector of a realization, where `g` is the
/// realization's generator (free boson or Virasoro).
///
/// The empty partition is the lowest-weight vector itself.  States order
/// lexicographically on their parts, which gives each graded piece a
/// deterministic basis order.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct BasisState {
    parts: Vec<u32>,
}

impl BasisState {
    /// The lowest-weight vector (empty partition).
    pub fn base() -> Self {
        BasisState { parts: Vec::new() }
    }

    /// Builds a state from parts that are already descending.
    ///
    /// Callers that take user input should go through
    /// [`crate::ModuleRealization::state`], which also checks the
    /// realization's minimum-part constraint.
    pub fn from_descending(parts: Vec<u32>) -> Result<Self, VoaError> {
        for pair in parts.windows(2) {
            if pair[0] < pair[1] {
                return Err(VoaError::UnsortedPartition {
                    prev: pair[0],
                    next: pair[1],
                });
            }
        }
        if let Some(&p) = parts.iter().find(|&&p| p == 0) {
            return Err(VoaError::InvalidPartition {
                part: p,
                min_part: 1,
            });
        }
        Ok(BasisState { parts })
    }

    /// The partition parts, descending.
    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    /// True for the lowest-weight vector.
    pub fn is_base(&self) -> bool {
        self.parts.is_empty()
    }

    /// Sum of the parts: the degree of this state above the lowest weight.
    pub fn level(&self) -> i64 {
        self.parts.iter().map(|&p| p as i64).sum()
    }

    /// Number of parts.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    /// True when the partition is empty.
    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Multiplicity of `part` in the partition.
    pub fn multiplicity(&self, part: u32) -> usize {
        self.parts.iter().filter(|&&p| p == part).count()
    }

    /// New state with `part` inserted, keeping the descending order.
    pub fn with_part_added(&self, part: u32) -> BasisState {
        debug_assert!(part >= 1);
        let pos = self.parts.partition_point(|&p| p >= part);
        let mut parts = self.parts.clone();
        parts.insert(pos, part);
        BasisState { parts }
    }

    /// New state with one copy of `part` removed; `None` if absent.
    pub fn with_part_removed(&self, part: u32) -> Option<BasisState> {
        let pos = self.parts.iter().position(|&p| p == part)?;
        let mut parts = self.parts.clone();
        parts.remove(pos);
        Some(BasisState { parts })
    }

    /// Splits off the largest part: `(first, rest)`; `None` on the base state.
    pub fn split_first(&self) -> Option<(u32, BasisState)> {
        let (&first, rest) = self.parts.split_first()?;
        Some((
            first,
            BasisState {
                parts: rest.to_vec(),
            },
        ))
    }
}

impl fmt::Debug for BasisState {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "|{:?}>", self.parts)
    }
}

/// An exact rational linear combination of [`BasisState`]s.
///
/// No explicit zero coefficients are stored, so `is_zero` and equality are
/// structural.  The map ordering makes iteration deterministic.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct StateVector {
    terms: BTreeMap<BasisState, Scalar>,
}

impl StateVector {
    /// The zero vector.
    pub fn zero() -> Self {
        StateVector {
            terms: BTreeMap::new(),
        }
    }

    /// The single state `s` with coefficient 1.
    pub fn from_state(s: BasisState) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(s, Scalar::one());
        StateVector { terms }
    }

    /// A single state with an arbitrary coefficient.
    pub fn from_term(s: BasisState, c: Scalar) -> Self {
        let mut v = StateVector::zero();
        v.add_term(s, c);
        v
    }

    /// True when no terms are present.
    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Number of stored terms.
    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Coefficient of `s` (zero when absent).
    pub fn coeff(&self, s: &BasisState) -> Scalar {
        self.terms.get(s).cloned().unwrap_or_else(Scalar::zero)
    }

    /// Adds `c * s`, dropping the entry if it cancels.
    pub fn add_term(&mut self, s: BasisState, c: Scalar) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(s);
        match entry {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += &c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    /// In-place `self += c * other`.
    pub fn axpy(&mut self, c: &Scalar, other: &StateVector) {
        if c.is_zero() {
            return;
        }
        for (s, a) in other.iter() {
            self.add_term(s.clone(), c.clone() * a);
        }
    }

    /// Returns `self * c`.
    pub fn scale(&self, c: &Scalar) -> StateVector {
        if c.is_zero() {
            return StateVector::zero();
        }
        StateVector {
            terms: self
                .terms
                .iter()
                .map(|(s, a)| (s.clone(), a.clone() * c))
                .collect(),
        }
    }

    /// Returns `self + other`.
    pub fn add(&self, other: &StateVector) -> StateVector {
        let mut out = self.clone();
        out.axpy(&Scalar::one(), other);
        out
    }

    /// Returns `self - other`.
    pub fn sub(&self, other: &StateVector) -> StateVector {
        let mut out = self.clone();
        out.axpy(&Scalar::from_int(-1), other);
        out
    }

    /// Iterates over `(state, coefficient)` pairs in basis order.
    pub fn iter(&self) -> impl Iterator<Item = (&BasisState, &Scalar)> {
        self.terms.iter()
    }

    /// The distinct degrees present, ascending.
    pub fn levels_present(&self) -> Vec<i64> {
        let mut levels: Vec<i64> = self.terms.keys().map(BasisState::level).collect();
        levels.sort_unstable();
        levels.dedup();
        levels
    }

    /// The common degree when every term sits at one degree; `None` when the
    /// vector is zero or mixes degrees.
    pub fn level(&self) -> Option<i64> {
        let levels = self.levels_present();
        match levels.as_slice() {
            [single] => Some(*single),
            _ => None,
        }
    }

    /// The part of the vector living at `level`.
    pub fn component_at_level(&self, level: i64) -> StateVector {
        StateVector {
            terms: self
                .terms
                .iter()
                .filter(|(s, _)| s.level() == level)
                .map(|(s, c)| (s.clone(), c.clone()))
                .collect(),
        }
    }

    /// Splits into `(level, component)` pairs, ascending in level.
    pub fn homogeneous_components(&self) -> Vec<(i64, StateVector)> {
        self.levels_present()
            .into_iter()
            .map(|l| (l, self.component_at_level(l)))
            .collect()
    }

    /// Multiplies each homogeneous component at degree `d` by `t^d`.
    ///
    /// This is the action of `t` raised to the degree operator, up to the
    /// overall shift by the lowest weight (which callers account for
    /// separately when it matters).
    pub fn scale_by_level_power(&self, t: &Scalar) -> StateVector {
        let mut out = StateVector::zero();
        for (s, c) in self.iter() {
            let lvl = s.level();
            out.add_term(s.clone(), c.clone() * &t.pow(lvl));
        }
        out
    }
}

impl Payload for StateVector {
    fn zero() -> Self {
        StateVector::zero()
    }

    fn is_zero(&self) -> bool {
        StateVector::is_zero(self)
    }

    fn add_scaled(&mut self, c: &Scalar, other: &Self) {
        self.axpy(c, other);
    }

    fn scaled(&self, c: &Scalar) -> Self {
        self.scale(c)
    }
}

impl fmt::Debug for StateVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (s, c) in self.iter() {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            write!(f, "({c})*{s:?}")?;
        }
        Ok(())
    }
}

impl FromIterator<(BasisState, Scalar)> for StateVector {
    fn from_iter<T: IntoIterator<Item = (BasisState, Scalar)>>(iter: T) -> Self {
        let mut v = StateVector::zero();
        for (s, c) in iter {
            v.add_term(s, c);
        }
        v
    }
}
