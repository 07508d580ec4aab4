use std::collections::BTreeMap;
use std::fmt;

use core_linalg::{binomial, Scalar};

use crate::{FormalError, Payload};

/// A finite formal sum `Σ_p c_p x^p` with integer powers of either sign and
/// coefficients in a [`Payload`].
///
/// No explicit zero coefficients are ever stored, so equality is structural.
/// Unlike [`crate::SeriesWindow`], a Laurent polynomial is a *complete*
/// object: the coefficient of any power is exactly known (zero outside the
/// finite support), so `coeff` is total.
#[derive(Clone, PartialEq)]
pub struct LaurentPolynomial<T: Payload> {
    coeffs: BTreeMap<i64, T>,
}

impl<T: Payload> LaurentPolynomial<T> {
    /// The zero polynomial.
    pub fn zero() -> Self {
        LaurentPolynomial {
            coeffs: BTreeMap::new(),
        }
    }

    /// The single term `c · x^power`.
    pub fn monomial(power: i64, c: T) -> Self {
        let mut p = Self::zero();
        p.add_to(power, &c);
        p
    }

    /// Builds a polynomial from `(power, coefficient)` pairs, summing
    /// duplicates.
    pub fn from_terms<I: IntoIterator<Item = (i64, T)>>(terms: I) -> Self {
        let mut p = Self::zero();
        for (power, c) in terms {
            p.add_to(power, &c);
        }
        p
    }

    /// `true` iff the polynomial is zero.
    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// The exact coefficient of `x^power` (zero outside the support).
    pub fn coeff(&self, power: i64) -> T {
        self.coeffs.get(&power).cloned().unwrap_or_else(T::zero)
    }

    /// Adds `c` into the coefficient of `x^power`.
    pub fn add_to(&mut self, power: i64, c: &T) {
        if c.is_zero() {
            return;
        }
        let entry = self.coeffs.entry(power).or_insert_with(T::zero);
        entry.add_scaled(&Scalar::one(), c);
        if entry.is_zero() {
            self.coeffs.remove(&power);
        }
    }

    /// Adds `s · c` into the coefficient of `x^power`.
    pub fn add_scaled_to(&mut self, power: i64, s: &Scalar, c: &T) {
        if s.is_zero() || c.is_zero() {
            return;
        }
        let entry = self.coeffs.entry(power).or_insert_with(T::zero);
        entry.add_scaled(s, c);
        if entry.is_zero() {
            self.coeffs.remove(&power);
        }
    }

    /// The lowest occupied power, if any.
    pub fn min_power(&self) -> Option<i64> {
        self.coeffs.keys().next().copied()
    }

    /// The highest occupied power, if any.
    pub fn max_power(&self) -> Option<i64> {
        self.coeffs.keys().next_back().copied()
    }

    /// Iterates `(power, coefficient)` in ascending power order.
    pub fn iter(&self) -> impl Iterator<Item = (i64, &T)> {
        self.coeffs.iter().map(|(p, c)| (*p, c))
    }

    /// Number of nonzero terms.
    pub fn term_count(&self) -> usize {
        self.coeffs.len()
    }

    /// `self + other`.
    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (p, c) in other.iter() {
            out.add_to(p, c);
        }
        out
    }

    /// `self − other`.
    pub fn sub(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (p, c) in other.iter() {
            out.add_scaled_to(p, &Scalar::from_int(-1), c);
        }
        out
    }

    /// `s · self`.
    pub fn scale(&self, s: &Scalar) -> Self {
        if s.is_zero() {
            return Self::zero();
        }
        LaurentPolynomial {
            coeffs: self.coeffs.iter().map(|(p, c)| (*p, c.scaled(s))).collect(),
        }
    }

    /// `x^d · self`.
    pub fn shift_power(&self, d: i64) -> Self {
        LaurentPolynomial {
            coeffs: self.coeffs.iter().map(|(p, c)| (p + d, c.clone())).collect(),
        }
    }

    /// Multiplies by a scalar-coefficient Laurent polynomial (the payload
    /// space is a module over `ℚ[x, x^{-1}]` acting through its scalars).
    pub fn mul_poly(&self, p: &LaurentPolynomial<Scalar>) -> Self {
        let mut out = Self::zero();
        for (q, s) in p.iter() {
            for (r, c) in self.iter() {
                out.add_scaled_to(q + r, s, c);
            }
        }
        out
    }

    /// The formal derivative `Σ p · c_p x^{p−1}`.
    pub fn derivative(&self) -> Self {
        let mut out = Self::zero();
        for (p, c) in self.iter() {
            out.add_scaled_to(p - 1, &Scalar::from_int(p), c);
        }
        out
    }

    /// The coefficient of `x^{-1}`.
    pub fn residue(&self) -> T {
        self.coeff(-1)
    }

    /// Evaluates at a scalar point by `Σ c_p · x0^p`.
    ///
    /// # Panics
    ///
    /// Panics when `x0 == 0` and negative powers are present.
    pub fn eval(&self, x0: &Scalar) -> T {
        let mut acc = T::zero();
        for (p, c) in self.iter() {
            acc.add_scaled(&x0.pow(p), c);
        }
        acc
    }
}

impl LaurentPolynomial<Scalar> {
    /// The constant polynomial `c`.
    pub fn constant(c: Scalar) -> Self {
        Self::monomial(0, c)
    }

    /// Full polynomial multiplication (scalar coefficients).
    pub fn mul(&self, other: &Self) -> Self {
        self.mul_poly(other)
    }

    /// `self^n` for `n ≥ 0`.
    pub fn pow(&self, n: u32) -> Self {
        let mut acc = Self::constant(Scalar::one());
        for _ in 0..n {
            acc = acc.mul(self);
        }
        acc
    }
}

impl<T: Payload> Payload for LaurentPolynomial<T> {
    fn zero() -> Self {
        LaurentPolynomial::zero()
    }

    fn is_zero(&self) -> bool {
        LaurentPolynomial::is_zero(self)
    }

    fn add_scaled(&mut self, c: &Scalar, other: &Self) {
        for (p, v) in other.iter() {
            self.add_scaled_to(p, c, v);
        }
    }

    fn scaled(&self, c: &Scalar) -> Self {
        self.scale(c)
    }
}

impl<T: Payload + fmt::Debug> fmt::Debug for LaurentPolynomial<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (p, c) in self.iter() {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            write!(f, "({c:?})·x^{p}")?;
        }
        Ok(())
    }
}

/// Divides a polynomial (nonnegative powers only) by the linear factor
/// `x − r`, returning `(quotient, remainder)` with
/// `g(x) = (x − r) · quotient(x) + remainder` and `remainder = g(r)`.
///
/// # Panics
///
/// Panics if `g` has negative powers.
pub fn poly_div_linear(
    g: &LaurentPolynomial<Scalar>,
    r: &Scalar,
) -> (LaurentPolynomial<Scalar>, Scalar) {
    assert!(
        g.min_power().unwrap_or(0) >= 0,
        "synthetic division needs a plain polynomial"
    );
    let Some(deg) = g.max_power() else {
        return (LaurentPolynomial::zero(), Scalar::zero());
    };
    let mut quotient = LaurentPolynomial::zero();
    let mut carry = Scalar::zero();
    for p in (0..=deg).rev() {
        let c = g.coeff(p) + &carry * r;
        if p == 0 {
            return (quotient, c);
        }
        quotient.add_to(p - 1, &c);
        carry = c;
    }
    unreachable!("loop always returns at p == 0");
}

/// Substitutes `x ↦ x + z0` into a polynomial with nonnegative powers:
/// `x^n ↦ Σ_i C(n, i) z0^i x^{n−i}`.
///
/// Negative powers are refused — `(x + z0)^{-1}` is not a Laurent
/// polynomial; route through [`crate::RationalFunctionWithPoles`] instead.
pub fn shift_substitute_poly<T: Payload>(
    p: &LaurentPolynomial<T>,
    z0: &Scalar,
) -> Result<LaurentPolynomial<T>, FormalError> {
    if p.min_power().unwrap_or(0) < 0 {
        return Err(FormalError::NonPolynomialShift);
    }
    if z0.is_zero() {
        return Ok(p.clone());
    }
    let mut out = LaurentPolynomial::zero();
    for (n, c) in p.iter() {
        for i in 0..=n {
            let coeff = binomial(n, i as u64) * z0.pow(i);
            out.add_scaled_to(n - i, &coeff, c);
        }
    }
    Ok(out)
}
