use std::fmt;

use core_linalg::Scalar;

use crate::{FormalError, LaurentPolynomial, Payload};

/// Which one-sided expansion a [`SeriesWindow`] is a fragment of.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ExpansionDirection {
    /// Expansion at `0`: powers ascend, support is bounded below.
    AtZero,
    /// Expansion at `∞`: powers descend, support is bounded above.
    AtInfinity,
}

impl ExpansionDirection {
    pub(crate) fn label(self) -> &'static str {
        match self {
            ExpansionDirection::AtZero => "at 0 (ascending powers)",
            ExpansionDirection::AtInfinity => "at infinity (descending powers)",
        }
    }
}

/// A contiguous block `[lo, hi]` of exactly computed coefficients of a
/// one-sided infinite series.
///
/// The window bounds are inclusive and explicit. Querying a power outside
/// `[lo, hi]` is an error — a window never pretends to know coefficients it
/// was not given, even ones a caller might "know" to vanish. Zeros *inside*
/// the window are genuine computed zeros.
#[derive(Clone, PartialEq)]
pub struct SeriesWindow<T: Payload> {
    direction: ExpansionDirection,
    lo: i64,
    hi: i64,
    coeffs: LaurentPolynomial<T>,
}

impl<T: Payload> SeriesWindow<T> {
    /// An all-zero window over `[lo, hi]`.
    ///
    /// # Panics
    ///
    /// Panics if `lo > hi`.
    pub fn zero(direction: ExpansionDirection, lo: i64, hi: i64) -> Self {
        assert!(lo <= hi, "window [{lo}, {hi}] is empty");
        SeriesWindow {
            direction,
            lo,
            hi,
            coeffs: LaurentPolynomial::zero(),
        }
    }

    /// Builds a window by evaluating `f` at every power in `[lo, hi]`.
    pub fn from_fn(
        direction: ExpansionDirection,
        lo: i64,
        hi: i64,
        mut f: impl FnMut(i64) -> T,
    ) -> Self {
        let mut w = Self::zero(direction, lo, hi);
        for p in lo..=hi {
            w.set(p, f(p));
        }
        w
    }

    /// The expansion direction.
    pub fn direction(&self) -> ExpansionDirection {
        self.direction
    }

    /// The inclusive window bounds `(lo, hi)`.
    pub fn window(&self) -> (i64, i64) {
        (self.lo, self.hi)
    }

    /// Stores a coefficient.
    ///
    /// # Panics
    ///
    /// Panics when `power` lies outside the window (building outside the
    /// declared range is a programming error, not an input error).
    pub fn set(&mut self, power: i64, value: T) {
        assert!(
            self.lo <= power && power <= self.hi,
            "set at {power} outside window [{}, {}]",
            self.lo,
            self.hi
        );
        let old = self.coeffs.coeff(power);
        if !old.is_zero() {
            self.coeffs.add_scaled_to(power, &Scalar::from_int(-1), &old);
        }
        self.coeffs.add_to(power, &value);
    }

    /// Adds into a coefficient (same bounds rule as [`SeriesWindow::set`]).
    pub fn add_to(&mut self, power: i64, value: &T) {
        assert!(
            self.lo <= power && power <= self.hi,
            "add at {power} outside window [{}, {}]",
            self.lo,
            self.hi
        );
        self.coeffs.add_to(power, value);
    }

    /// The coefficient of `x^power`, or an error if outside the window.
    pub fn coeff(&self, power: i64) -> Result<T, FormalError> {
        if power < self.lo || power > self.hi {
            return Err(FormalError::OutOfWindow {
                power,
                lo: self.lo,
                hi: self.hi,
            });
        }
        Ok(self.coeffs.coeff(power))
    }

    /// The coefficient of `x^{-1}`.
    pub fn residue(&self) -> Result<T, FormalError> {
        self.coeff(-1)
    }

    /// `true` iff every coefficient in the window is zero.
    pub fn is_zero(&self) -> bool {
        self.coeffs.is_zero()
    }

    /// The window restricted to `[lo, hi] ⊆` the current window.
    pub fn restrict(&self, lo: i64, hi: i64) -> Result<Self, FormalError> {
        if lo < self.lo || hi > self.hi || lo > hi {
            return Err(FormalError::OutOfWindow {
                power: if lo < self.lo { lo } else { hi },
                lo: self.lo,
                hi: self.hi,
            });
        }
        let mut out = Self::zero(self.direction, lo, hi);
        for (p, c) in self.coeffs.iter() {
            if lo <= p && p <= hi {
                out.add_to(p, c);
            }
        }
        Ok(out)
    }

    /// `self + other` on the overlap of the two windows.
    pub fn add(&self, other: &Self) -> Result<Self, FormalError> {
        if self.direction != other.direction {
            return Err(FormalError::DirectionMismatch {
                expected: self.direction.label(),
                got: other.direction.label(),
            });
        }
        let lo = self.lo.max(other.lo);
        let hi = self.hi.min(other.hi);
        if lo > hi {
            return Err(FormalError::DisjointWindows {
                lo_a: self.lo,
                hi_a: self.hi,
                lo_b: other.lo,
                hi_b: other.hi,
            });
        }
        let mut out = self.restrict(lo, hi)?;
        for (p, c) in other.coeffs.iter() {
            if lo <= p && p <= hi {
                out.add_to(p, c);
            }
        }
        Ok(out)
    }

    /// `self − other` on the overlap of the two windows.
    pub fn sub(&self, other: &Self) -> Result<Self, FormalError> {
        self.add(&other.scale(&Scalar::from_int(-1)))
    }

    /// `s · self`.
    pub fn scale(&self, s: &Scalar) -> Self {
        SeriesWindow {
            direction: self.direction,
            lo: self.lo,
            hi: self.hi,
            coeffs: self.coeffs.scale(s),
        }
    }

    /// Multiplies by a finite Laurent polynomial `p`, shrinking the window
    /// to the powers whose product coefficients are fully determined by the
    /// stored block: `[lo + b, hi + a]` where `[a, b]` is the support of
    /// `p`. No assumption is made about coefficients outside the window.
    pub fn mul_poly(&self, p: &LaurentPolynomial<Scalar>) -> Result<Self, FormalError> {
        let (Some(a), Some(b)) = (p.min_power(), p.max_power()) else {
            // Multiplying by zero: a zero window over the same range.
            return Ok(Self::zero(self.direction, self.lo, self.hi));
        };
        let lo = self.lo + b;
        let hi = self.hi + a;
        if lo > hi {
            return Err(FormalError::DisjointWindows {
                lo_a: lo,
                hi_a: hi,
                lo_b: self.lo,
                hi_b: self.hi,
            });
        }
        let mut out = Self::zero(self.direction, lo, hi);
        for (q, s) in p.iter() {
            for (r, c) in self.coeffs.iter() {
                let power = q + r;
                if lo <= power && power <= hi {
                    out.coeffs.add_scaled_to(power, s, c);
                }
            }
        }
        Ok(out)
    }

    /// Iterates the *stored nonzero* coefficients in ascending power order.
    pub fn iter_nonzero(&self) -> impl Iterator<Item = (i64, &T)> {
        self.coeffs.iter()
    }
}

impl<T: Payload + fmt::Debug> fmt::Debug for SeriesWindow<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "[{}, {}] {}: {:?}",
            self.lo,
            self.hi,
            self.direction.label(),
            self.coeffs
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn geometric(lo: i64, hi: i64) -> SeriesWindow<Scalar> {
        // 1 − x + x² − … (expansion of 1/(1+x) at 0)
        SeriesWindow::from_fn(ExpansionDirection::AtZero, lo, hi, |p| {
            if p >= 0 {
                Scalar::from_int(if p % 2 == 0 { 1 } else { -1 })
            } else {
                Scalar::zero()
            }
        })
    }

    #[test]
    fn out_of_window_queries_error_on_both_sides() {
        let w = geometric(0, 3);
        assert!(w.coeff(2).is_ok());
        assert_eq!(
            w.coeff(4),
            Err(FormalError::OutOfWindow {
                power: 4,
                lo: 0,
                hi: 3
            })
        );
        assert!(w.coeff(-1).is_err());
        assert!(w.residue().is_err());
    }

    #[test]
    fn addition_intersects_windows() {
        let a = geometric(0, 5);
        let b = geometric(2, 8).scale(&Scalar::from_int(-1));
        let sum = a.add(&b).unwrap();
        assert_eq!(sum.window(), (2, 5));
        assert!(sum.is_zero());
        let far = geometric(7, 9);
        assert!(matches!(
            a.add(&far),
            Err(FormalError::DisjointWindows { .. })
        ));
    }

    #[test]
    fn poly_multiplication_shrinks_the_window_correctly() {
        // (1 + x) · (1 − x + x² − …) = 1, but the window loses its top.
        let w = geometric(0, 5);
        let p = LaurentPolynomial::from_terms([(0, Scalar::one()), (1, Scalar::one())]);
        let prod = w.mul_poly(&p).unwrap();
        assert_eq!(prod.window(), (1, 5));
        assert!(prod.is_zero());
        // Coefficient 1 at power 0 is *not* claimed: power 0 would need the
        // (unavailable) coefficient below the window floor.
        assert!(prod.coeff(0).is_err());
    }

    #[test]
    fn direction_mismatch_is_refused() {
        let a = geometric(0, 3);
        let b = SeriesWindow::zero(ExpansionDirection::AtInfinity, 0, 3);
        assert!(matches!(
            a.add(&b),
            Err(FormalError::DirectionMismatch { .. })
        ));
    }
}
