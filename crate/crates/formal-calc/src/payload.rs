use core_linalg::{Scalar, SparseVector};

/// Coefficient domain for Laurent polynomials and series windows.
///
/// A payload is an element of some `ℚ`-vector space with exact equality:
/// plain scalars, sparse coordinate vectors, graded module elements
/// (implemented downstream), or Laurent polynomials again — nesting a
/// polynomial inside a polynomial yields a two-variable object.
pub trait Payload: Clone + PartialEq {
    /// The additive identity.
    fn zero() -> Self;

    /// `true` iff the value is the additive identity.
    fn is_zero(&self) -> bool;

    /// In-place `self += c · other`.
    fn add_scaled(&mut self, c: &Scalar, other: &Self);

    /// `c · self`.
    fn scaled(&self, c: &Scalar) -> Self;
}

impl Payload for Scalar {
    fn zero() -> Self {
        Scalar::zero()
    }

    fn is_zero(&self) -> bool {
        Scalar::is_zero(self)
    }

    fn add_scaled(&mut self, c: &Scalar, other: &Self) {
        *self += &(c * other);
    }

    fn scaled(&self, c: &Scalar) -> Self {
        self * c
    }
}

impl Payload for SparseVector {
    fn zero() -> Self {
        SparseVector::zero()
    }

    fn is_zero(&self) -> bool {
        SparseVector::is_zero(self)
    }

    fn add_scaled(&mut self, c: &Scalar, other: &Self) {
        self.axpy(c, other);
    }

    fn scaled(&self, c: &Scalar) -> Self {
        self.scale(c)
    }
}
