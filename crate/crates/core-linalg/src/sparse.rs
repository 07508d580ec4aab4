use std::collections::BTreeMap;
use std::fmt;

use crate::Scalar;

/// A sparse vector with rational entries, indexed by `usize`.
///
/// Invariant: the underlying map never stores an explicit zero, so equality
/// of vectors is equality of the maps and `support_len() == 0` iff the vector
/// is zero. The ambient dimension is not stored here; callers that need
/// bounds checking (e.g. [`crate::SpanHandle`]) enforce it themselves.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct SparseVector {
    entries: BTreeMap<usize, Scalar>,
}

impl SparseVector {
    /// The zero vector.
    pub fn zero() -> Self {
        SparseVector {
            entries: BTreeMap::new(),
        }
    }

    /// A unit coordinate vector `e_index`.
    pub fn unit(index: usize) -> Self {
        let mut v = SparseVector::zero();
        v.set(index, Scalar::one());
        v
    }

    /// Builds a vector from `(index, coefficient)` pairs, summing duplicates.
    pub fn from_entries<I: IntoIterator<Item = (usize, Scalar)>>(entries: I) -> Self {
        let mut v = SparseVector::zero();
        for (i, c) in entries {
            v.add_to(i, &c);
        }
        v
    }

    /// `true` iff the vector is zero.
    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    /// Number of nonzero coordinates.
    pub fn support_len(&self) -> usize {
        self.entries.len()
    }

    /// The coefficient at `index` (zero when absent).
    pub fn coeff(&self, index: usize) -> Scalar {
        self.entries.get(&index).cloned().unwrap_or_else(Scalar::zero)
    }

    /// Overwrites the coefficient at `index`, dropping explicit zeros.
    pub fn set(&mut self, index: usize, value: Scalar) {
        if value.is_zero() {
            self.entries.remove(&index);
        } else {
            self.entries.insert(index, value);
        }
    }

    /// Adds `value` into the coefficient at `index`.
    pub fn add_to(&mut self, index: usize, value: &Scalar) {
        if value.is_zero() {
            return;
        }
        let entry = self.entries.entry(index).or_insert_with(Scalar::zero);
        *entry += value;
        if entry.is_zero() {
            self.entries.remove(&index);
        }
    }

    /// The nonzero entry with the largest index, if any.
    pub fn leading(&self) -> Option<(usize, &Scalar)> {
        self.entries.iter().next_back().map(|(i, c)| (*i, c))
    }

    /// Iterates over `(index, coefficient)` pairs in increasing index order.
    pub fn iter(&self) -> impl Iterator<Item = (usize, &Scalar)> {
        self.entries.iter().map(|(i, c)| (*i, c))
    }

    /// Consumes the vector, yielding `(index, coefficient)` pairs in
    /// increasing index order.
    pub fn into_iter_entries(self) -> impl Iterator<Item = (usize, Scalar)> {
        self.entries.into_iter()
    }

    /// `self + other`.
    pub fn add(&self, other: &SparseVector) -> SparseVector {
        let mut out = self.clone();
        out.axpy(&Scalar::one(), other);
        out
    }

    /// `self - other`.
    pub fn sub(&self, other: &SparseVector) -> SparseVector {
        let mut out = self.clone();
        out.axpy(&Scalar::from_int(-1), other);
        out
    }

    /// `c · self`.
    pub fn scale(&self, c: &Scalar) -> SparseVector {
        if c.is_zero() {
            return SparseVector::zero();
        }
        let entries = self
            .entries
            .iter()
            .map(|(i, v)| (*i, c * v))
            .collect();
        SparseVector { entries }
    }

    /// In-place `self += c · other`.
    pub fn axpy(&mut self, c: &Scalar, other: &SparseVector) {
        if c.is_zero() {
            return;
        }
        for (i, v) in other.entries.iter() {
            self.add_to(*i, &(c * v));
        }
    }

    /// The dot product `Σ_i self_i · other_i`.
    pub fn dot(&self, other: &SparseVector) -> Scalar {
        // Walk the smaller support.
        let (small, big) = if self.support_len() <= other.support_len() {
            (self, other)
        } else {
            (other, self)
        };
        let mut acc = Scalar::zero();
        for (i, c) in small.entries.iter() {
            if let Some(d) = big.entries.get(i) {
                acc += c * d;
            }
        }
        acc
    }
}

impl fmt::Debug for SparseVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.entries.iter() {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            write!(f, "{}·e{}", c, i)?;
        }
        Ok(())
    }
}

impl FromIterator<(usize, Scalar)> for SparseVector {
    fn from_iter<I: IntoIterator<Item = (usize, Scalar)>>(iter: I) -> Self {
        SparseVector::from_entries(iter)
    }
}
