use std::collections::BTreeMap;

use crate::{LinalgError, Scalar, SparseVector};

/// Result of a membership test against a [`SpanHandle`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Membership {
    /// The vector lies in the span; `coefficients[j]` is the coefficient of
    /// the `j`-th *originally pushed* generator in one expression of the
    /// vector (generators pushed later are preferred by the elimination, so
    /// the expression is deterministic but not unique when the generators
    /// are dependent).
    Member { coefficients: Vec<Scalar> },
    /// The vector does not lie in the span; `witness_index` is the highest
    /// nonzero coordinate of its irreducible remainder, a coordinate that no
    /// combination of generators can cancel.
    NotMember { witness_index: usize },
}

/// An incrementally built row-echelon basis for a subspace of `ℚ^ambient`.
///
/// Rows are kept fully inter-reduced with pivot coefficient `1`, where the
/// pivot of a row is its *highest* nonzero index. Highest-index pivoting is
/// chosen deliberately: ambient coordinates are enumerated in ascending
/// filtration order by the callers, so reduction pushes vectors toward the
/// low end of the filtration and remainders are supported on the earliest
/// possible coordinates.
///
/// Each row also carries the combination of original generators that
/// produced it, so membership tests can report coefficients over exactly the
/// vectors the caller pushed.
#[derive(Clone, Debug, Default)]
pub struct SpanHandle {
    ambient_dim: usize,
    rows: Vec<SparseVector>,
    combos: Vec<SparseVector>,
    row_of_pivot: BTreeMap<usize, usize>,
    n_generators: usize,
}

impl SpanHandle {
    /// An empty span inside `ℚ^ambient_dim`.
    pub fn new(ambient_dim: usize) -> Self {
        SpanHandle {
            ambient_dim,
            rows: Vec::new(),
            combos: Vec::new(),
            row_of_pivot: BTreeMap::new(),
            n_generators: 0,
        }
    }

    /// The ambient dimension supplied at construction.
    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    /// Dimension of the span so far.
    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// How many generators have been pushed (independent or not).
    pub fn num_generators(&self) -> usize {
        self.n_generators
    }

    /// The reduced rows currently spanning the subspace, in insertion order.
    pub fn basis_rows(&self) -> &[SparseVector] {
        &self.rows
    }

    /// `true` iff `index` is the pivot of some row.
    pub fn is_pivot(&self, index: usize) -> bool {
        self.row_of_pivot.contains_key(&index)
    }

    fn check_indices(&self, v: &SparseVector) -> Result<(), LinalgError> {
        if let Some((i, _)) = v.leading() {
            if i >= self.ambient_dim {
                return Err(LinalgError::IndexMismatch {
                    index: i,
                    ambient: self.ambient_dim,
                });
            }
        }
        Ok(())
    }

    /// Adds a generator. Returns `true` when the rank increased.
    pub fn push(&mut self, v: SparseVector) -> Result<bool, LinalgError> {
        self.check_indices(&v)?;
        let gen_index = self.n_generators;
        self.n_generators += 1;
        let (mut rem, mut combo) = self.reduce_internal(&v);
        // v = Σ combo_j·gen_j + rem, so rem = v − Σ combo_j·gen_j; record rem
        // as +1·(this generator) − combo.
        let Some((pivot, lead)) = rem.leading() else {
            return Ok(false);
        };
        let pivot_inv = lead.inv();
        rem = rem.scale(&pivot_inv);
        combo = combo.scale(&-&pivot_inv);
        combo.add_to(gen_index, &pivot_inv);
        // Full inter-reduction: clear the new pivot from every existing row.
        for r in 0..self.rows.len() {
            let c = self.rows[r].coeff(pivot);
            if !c.is_zero() {
                let neg_c = -c;
                self.rows[r].axpy(&neg_c, &rem);
                let combo_update = combo.clone();
                self.combos[r].axpy(&neg_c, &combo_update);
            }
        }
        self.row_of_pivot.insert(pivot, self.rows.len());
        self.rows.push(rem);
        self.combos.push(combo);
        Ok(true)
    }

    fn reduce_internal(&self, v: &SparseVector) -> (SparseVector, SparseVector) {
        // Because rows are fully inter-reduced, subtracting a row never
        // introduces a pivot index, so one pass over v's pivot hits suffices.
        let hits: Vec<(usize, Scalar)> = v
            .iter()
            .filter_map(|(i, c)| self.row_of_pivot.get(&i).map(|&r| (r, c.clone())))
            .collect();
        let mut rem = v.clone();
        let mut combo = SparseVector::zero();
        for (r, c) in hits {
            let neg_c = -&c;
            rem.axpy(&neg_c, &self.rows[r]);
            combo.axpy(&c, &self.combos[r]);
        }
        (rem, combo)
    }

    /// Splits `v` as `(remainder, combo)` with
    /// `v = Σ_j combo_j · generator_j + remainder` and the remainder free of
    /// pivot coordinates. The remainder is zero iff `v` lies in the span.
    pub fn reduce(&self, v: &SparseVector) -> Result<(SparseVector, SparseVector), LinalgError> {
        self.check_indices(v)?;
        Ok(self.reduce_internal(v))
    }

    /// Tests membership, reporting either coefficients over the original
    /// generators or the witness coordinate that cannot be cancelled.
    pub fn in_span(&self, v: &SparseVector) -> Result<Membership, LinalgError> {
        let (rem, combo) = self.reduce(v)?;
        match rem.leading() {
            None => {
                let mut coefficients = vec![Scalar::zero(); self.n_generators];
                for (j, c) in combo.iter() {
                    coefficients[j] = c.clone();
                }
                Ok(Membership::Member { coefficients })
            }
            Some((witness_index, _)) => Ok(Membership::NotMember { witness_index }),
        }
    }

    /// `true` iff `v` lies in the span.
    pub fn contains(&self, v: &SparseVector) -> Result<bool, LinalgError> {
        Ok(self.reduce(v)?.0.is_zero())
    }
}

/// A basis of the right kernel `{x : M·x = 0}` of the matrix `M` whose rows
/// are given, with columns indexed `0..ambient_dim`.
///
/// The basis is produced from the reduced row-echelon form: one vector per
/// free column `j`, equal to `e_j` minus the pivot-column corrections. For a
/// zero (or empty) matrix every column is free, so the result is the full
/// standard basis.
pub fn kernel_basis(
    rows: &[SparseVector],
    ambient_dim: usize,
) -> Result<Vec<SparseVector>, LinalgError> {
    let mut span = SpanHandle::new(ambient_dim);
    for row in rows {
        span.push(row.clone())?;
    }
    let mut basis = Vec::new();
    for j in 0..ambient_dim {
        if span.is_pivot(j) {
            continue;
        }
        let mut x = SparseVector::unit(j);
        for (p, &r) in span.row_of_pivot.iter() {
            let a = span.rows[r].coeff(j);
            if !a.is_zero() {
                x.add_to(*p, &-a);
            }
        }
        basis.push(x);
    }
    Ok(basis)
}
