//! Finite-dimensional modules over a quotient multiplication table, given by
//! explicit action matrices, and character (one-dimensional) actions built
//! from a single generator value.

use std::sync::Arc;

use anv_alg::{ClassVector, ProductEntry, QuotientTable};
use core_linalg::{Scalar, SpanHandle, SparseVector};

use crate::error::RegrepError;

/// A dense square matrix in row-major layout.
pub type Matrix = Vec<Vec<Scalar>>;

fn identity_matrix(dim: usize) -> Matrix {
    (0..dim)
        .map(|r| {
            (0..dim)
                .map(|c| if r == c { Scalar::one() } else { Scalar::zero() })
                .collect()
        })
        .collect()
}

fn mat_mul(a: &Matrix, b: &Matrix) -> Matrix {
    let dim = a.len();
    let mut out = vec![vec![Scalar::zero(); dim]; dim];
    for (r, out_row) in out.iter_mut().enumerate() {
        for (k, b_row) in b.iter().enumerate() {
            let a_rk = &a[r][k];
            if a_rk.is_zero() {
                continue;
            }
            for (c, out_cell) in out_row.iter_mut().enumerate() {
                *out_cell += a_rk.clone() * &b_row[c];
            }
        }
    }
    out
}

fn mat_axpy(acc: &mut Matrix, c: &Scalar, m: &Matrix) {
    for (acc_row, m_row) in acc.iter_mut().zip(m) {
        for (a, v) in acc_row.iter_mut().zip(m_row) {
            *a += c.clone() * v;
        }
    }
}

/// A module structure on a `dim`-dimensional coordinate space over the
/// algebra presented by a [`QuotientTable`]: one action matrix per table
/// basis class, verified against the multiplication table on construction.
#[derive(Debug, Clone)]
pub struct AnAction {
    table: Arc<QuotientTable>,
    dim: usize,
    matrices: Vec<Matrix>,
}

impl AnAction {
    /// Wraps action matrices over the table after verifying that they
    /// represent it: the identity class must act as the identity matrix and
    /// `act(i)·act(j)` must equal the action of the tabulated product
    /// `i · j` for every pair whose product the table resolves (pairs whose
    /// product escapes the cutoff are skipped — they are unverifiable at
    /// this table size, not wrong).
    ///
    /// # Errors
    ///
    /// Matrix shape mismatches and every verifiable representation failure
    /// are reported as [`RegrepError::InconsistentAction`].
    pub fn new(
        table: Arc<QuotientTable>,
        dim: usize,
        matrices: Vec<Matrix>,
    ) -> Result<Self, RegrepError> {
        if matrices.len() != table.dim() {
            return Err(RegrepError::InconsistentAction {
                detail: format!(
                    "{} matrices supplied for a table of dimension {}",
                    matrices.len(),
                    table.dim()
                ),
            });
        }
        for (i, m) in matrices.iter().enumerate() {
            if m.len() != dim || m.iter().any(|row| row.len() != dim) {
                return Err(RegrepError::InconsistentAction {
                    detail: format!("matrix {i} is not {dim} x {dim}"),
                });
            }
        }
        let action = AnAction {
            table,
            dim,
            matrices,
        };
        action.verify()?;
        Ok(action)
    }

    fn verify(&self) -> Result<(), RegrepError> {
        if self.dim == 0 {
            return Ok(());
        }
        let id = identity_matrix(self.dim);
        if self.matrices[self.table.identity_index()] != id {
            return Err(RegrepError::InconsistentAction {
                detail: "identity class does not act as the identity matrix".into(),
            });
        }
        for i in 0..self.table.dim() {
            for j in 0..self.table.dim() {
                let expected = match self.table.product(i, j) {
                    ProductEntry::Reduced(class) => self.class_matrix(class),
                    ProductEntry::NeedsCutoff { .. } => continue,
                };
                let got = mat_mul(&self.matrices[i], &self.matrices[j]);
                if got != expected {
                    return Err(RegrepError::InconsistentAction {
                        detail: format!(
                            "act({i})·act({j}) differs from the action of the tabulated product"
                        ),
                    });
                }
            }
        }
        Ok(())
    }

    /// The underlying multiplication table.
    pub fn table(&self) -> &Arc<QuotientTable> {
        &self.table
    }

    /// Dimension of the coordinate space.
    pub fn dim(&self) -> usize {
        self.dim
    }

    /// The action matrix of a single table basis class.
    pub fn basis_matrix(&self, i: usize) -> &Matrix {
        &self.matrices[i]
    }

    /// The action matrix of a general class vector.
    pub fn class_matrix(&self, class: &ClassVector) -> Matrix {
        let mut out = vec![vec![Scalar::zero(); self.dim]; self.dim];
        for (i, c) in class {
            mat_axpy(&mut out, c, &self.matrices[*i]);
        }
        out
    }

    /// Applies a class vector to a coordinate vector.
    pub fn apply_class(&self, class: &ClassVector, u: &[Scalar]) -> Vec<Scalar> {
        let mut out = vec![Scalar::zero(); self.dim];
        for (i, c) in class {
            for (r, acc) in out.iter_mut().enumerate() {
                for (m, uc) in self.matrices[*i][r].iter().zip(u) {
                    *acc += c.clone() * m * uc;
                }
            }
        }
        out
    }

    /// If the class acts by a scalar multiple of the identity, returns that
    /// scalar.
    pub fn scalar_of_class(&self, class: &ClassVector) -> Option<Scalar> {
        if self.dim == 0 {
            return Some(Scalar::zero());
        }
        let m = self.class_matrix(class);
        let lambda = m[0][0].clone();
        let expected: Matrix = identity_matrix(self.dim)
            .into_iter()
            .map(|row| row.into_iter().map(|x| x * &lambda).collect())
            .collect();
        if m == expected {
            Some(lambda)
        } else {
            None
        }
    }

    /// Builds the one-dimensional action in which a chosen generator class
    /// acts by `value`, extending multiplicatively to the whole table basis.
    ///
    /// The extension is solved from the powers of the generator: the value
    /// on `g^k` must be `value^k`, and the basis classes must lie in the
    /// span of those powers.  This succeeds exactly when the generator
    /// generates the table as a unital algebra at this cutoff.
    ///
    /// # Errors
    ///
    /// [`RegrepError::CharacterExtensionFailure`] when a generator power
    /// escapes the table or the powers do not span; the multiplicativity of
    /// the result is then re-verified by [`AnAction::new`].
    pub fn character(
        table: Arc<QuotientTable>,
        generator: &ClassVector,
        value: &Scalar,
    ) -> Result<Self, RegrepError> {
        let dim = table.dim();
        // Columns of the power matrix: column k holds the class vector of
        // g^k over the table basis.  chi solves (powers)·chi = values by
        // expressing the value vector over those columns.
        let mut power = vec![(table.identity_index(), Scalar::one())];
        let mut columns: Vec<SparseVector> = Vec::new();
        let mut rhs = SparseVector::zero();
        let mut value_power = Scalar::one();
        for k in 0..dim {
            columns.push(SparseVector::from_entries(
                power.iter().map(|(i, c)| (*i, c.clone())),
            ));
            rhs.add_to(k, &value_power);
            value_power *= value;
            if k + 1 < dim {
                power = table.multiply(&power, generator).map_err(|e| {
                    RegrepError::CharacterExtensionFailure {
                        detail: format!("power {} of the generator escapes the table: {e}", k + 1),
                    }
                })?;
            }
        }
        // Transpose: solve chi from  sum_i chi_i · row_i = value vector,
        // where row_i collects the coefficient of basis class i in every
        // power.  Each row then corresponds to one unknown chi_i.
        let mut rows = vec![SparseVector::zero(); dim];
        for (k, col) in columns.iter().enumerate() {
            for (i, c) in col.iter() {
                rows[i].set(k, c.clone());
            }
        }
        let mut span = SpanHandle::new(dim);
        for row in &rows {
            span.push(row.clone())?;
        }
        if span.rank() != dim {
            return Err(RegrepError::CharacterExtensionFailure {
                detail: format!(
                    "the generator spans only {} of the {} basis classes at this cutoff",
                    span.rank(),
                    dim
                ),
            });
        }
        let chi = match span.in_span(&rhs)? {
            core_linalg::Membership::Member { coefficients } => coefficients,
            core_linalg::Membership::NotMember { .. } => {
                return Err(RegrepError::CharacterExtensionFailure {
                    detail: "the generator powers do not determine a character with this value"
                        .into(),
                })
            }
        };
        let mut matrices = vec![vec![vec![Scalar::zero()]]; dim];
        for (i, value) in chi.iter().enumerate() {
            matrices[i][0][0] = value.clone();
        }
        AnAction::new(table, 1, matrices)
    }

    /// The zero module (dimension 0) over the table.
    pub fn zero_module(table: Arc<QuotientTable>) -> Self {
        let matrices = vec![Vec::new(); table.dim()];
        AnAction {
            table,
            dim: 0,
            matrices,
        }
    }
}
