//! Finite-support linear functionals on a module, with values in an exact
//! rational coordinate space.

use std::collections::HashMap;

use core_linalg::Scalar;
use voa_core::{BasisState, StateVector};

use crate::error::RegrepError;

/// A linear functional on the module with values in a finite-dimensional
/// rational coordinate space, given by its (finitely many) nonzero values on
/// basis states.
///
/// States absent from the table evaluate to zero; in particular every state
/// of level above [`support_bound`](Functional::support_bound) does.
/// Evaluation extends linearly to arbitrary vectors.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Functional {
    dim: usize,
    support_bound: i64,
    values: HashMap<BasisState, Vec<Scalar>>,
}

impl Functional {
    /// The zero functional with `dim` coordinates.
    pub fn zero(dim: usize) -> Self {
        Functional {
            dim,
            support_bound: -1,
            values: HashMap::new(),
        }
    }

    /// Builds a functional from explicit values on basis states.
    ///
    /// # Errors
    ///
    /// Every value vector must have exactly `dim` coordinates.
    pub fn from_values(
        dim: usize,
        entries: impl IntoIterator<Item = (BasisState, Vec<Scalar>)>,
    ) -> Result<Self, RegrepError> {
        let mut values = HashMap::new();
        let mut support_bound = -1i64;
        for (state, value) in entries {
            if value.len() != dim {
                return Err(RegrepError::CoordinateDimMismatch {
                    expected: dim,
                    got: value.len(),
                });
            }
            if value.iter().all(Scalar::is_zero) {
                continue;
            }
            support_bound = support_bound.max(state.level());
            match values.entry(state) {
                std::collections::hash_map::Entry::Vacant(e) => {
                    e.insert(value);
                }
                std::collections::hash_map::Entry::Occupied(mut e) => {
                    for (acc, c) in e.get_mut().iter_mut().zip(value) {
                        *acc += c;
                    }
                }
            }
        }
        Ok(Functional {
            dim,
            support_bound,
            values,
        })
    }

    /// The one-coordinate functional dual to a single basis state: it reads
    /// off the coefficient of `state` and vanishes on every other state.
    pub fn dual_of_state(state: BasisState) -> Self {
        let support_bound = state.level();
        let mut values = HashMap::new();
        values.insert(state, vec![Scalar::one()]);
        Functional {
            dim: 1,
            support_bound,
            values,
        }
    }

    /// Number of coordinates of the value space.
    pub fn dim(&self) -> usize {
        self.dim
    }

    /// The largest level carrying a nonzero value (`-1` for the zero
    /// functional).
    pub fn support_bound(&self) -> i64 {
        self.support_bound
    }

    /// `true` when every value vanishes.
    pub fn is_zero(&self) -> bool {
        self.values.is_empty()
    }

    /// Iterates over the stored nonzero values.
    pub fn iter(&self) -> impl Iterator<Item = (&BasisState, &Vec<Scalar>)> {
        self.values.iter()
    }

    /// The value on a single basis state.
    pub fn eval_state(&self, state: &BasisState) -> Vec<Scalar> {
        match self.values.get(state) {
            Some(v) => v.clone(),
            None => vec![Scalar::zero(); self.dim],
        }
    }

    /// The value on a vector, by linearity.
    pub fn eval(&self, w: &StateVector) -> Vec<Scalar> {
        let mut out = vec![Scalar::zero(); self.dim];
        for (state, coeff) in w.iter() {
            if let Some(value) = self.values.get(state) {
                for (acc, v) in out.iter_mut().zip(value) {
                    *acc += coeff.clone() * v;
                }
            }
        }
        out
    }

    /// The sum of two functionals over the same coordinate space.
    ///
    /// # Errors
    ///
    /// The coordinate dimensions must agree.
    pub fn add(&self, other: &Functional) -> Result<Functional, RegrepError> {
        if self.dim != other.dim {
            return Err(RegrepError::CoordinateSpaceMismatch {
                left: self.dim,
                right: other.dim,
            });
        }
        Functional::from_values(
            self.dim,
            self.values
                .iter()
                .chain(other.values.iter())
                .map(|(s, v)| (s.clone(), v.clone())),
        )
    }

    /// The functional scaled by a constant.
    pub fn scale(&self, c: &Scalar) -> Functional {
        if c.is_zero() {
            return Functional::zero(self.dim);
        }
        Functional {
            dim: self.dim,
            support_bound: self.support_bound,
            values: self
                .values
                .iter()
                .map(|(s, v)| (s.clone(), v.iter().map(|x| x.clone() * c).collect()))
                .collect(),
        }
    }
}

/// Adds `c · value` into `acc`, coordinate-wise.
pub(crate) fn axpy_coords(acc: &mut [Scalar], c: &Scalar, value: &[Scalar]) {
    for (a, v) in acc.iter_mut().zip(value) {
        *a += c.clone() * v;
    }
}

/// `true` when every coordinate vanishes.
pub(crate) fn coords_are_zero(v: &[Scalar]) -> bool {
    v.iter().all(Scalar::is_zero)
}
