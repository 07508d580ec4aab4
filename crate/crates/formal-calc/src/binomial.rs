use core_linalg::{binomial, Scalar};

use crate::{ExpansionDirection, FormalError, LaurentPolynomial, SeriesWindow};

/// Which binomial is being expanded, fixing the expansion region.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BinomKind {
    /// `(x − z)^n`, expanded in *descending* powers of `x` (the region
    /// `|x| > |z|`): `Σ_{i≥0} (−z)^i C(n,i) x^{n−i}`.
    XMinusZ,
    /// `(z − x)^n`, expanded in *ascending* powers of `x` (the region
    /// `|z| > |x|`): `Σ_{i≥0} (−1)^i z^{n−i} C(n,i) x^i`.
    ZMinusX,
}

/// The windowed expansion of `(x − z)^n` or `(z − x)^n` with integer `n` of
/// either sign, under the fixed one-variable conventions of [`BinomKind`].
///
/// For `n ≥ 0` the two kinds are expansions of the same polynomial (up to
/// the sign `(−1)^n`) and agree with it on their windows.
///
/// # Errors
///
/// * `z = 0` is refused for both kinds.
/// * A window extending past the bounded side of the support is refused:
///   powers above `n` for `XMinusZ` (support is `{n, n−1, …}`), powers
///   below `0` for `ZMinusX` (support is `{0, 1, …}`).
pub fn binom_expand(
    kind: BinomKind,
    n: i64,
    z: &Scalar,
    lo: i64,
    hi: i64,
) -> Result<SeriesWindow<Scalar>, FormalError> {
    if z.is_zero() {
        return Err(FormalError::ZeroPoleLocation);
    }
    match kind {
        BinomKind::XMinusZ => {
            if hi > n {
                return Err(FormalError::WindowOutsideSupport { lo, hi, bound: n });
            }
            Ok(SeriesWindow::from_fn(
                ExpansionDirection::AtInfinity,
                lo,
                hi,
                |p| {
                    let i = (n - p) as u64;
                    binomial(n, i) * (-z).pow(i as i64)
                },
            ))
        }
        BinomKind::ZMinusX => {
            if lo < 0 {
                return Err(FormalError::WindowOutsideSupport { lo, hi, bound: 0 });
            }
            Ok(SeriesWindow::from_fn(
                ExpansionDirection::AtZero,
                lo,
                hi,
                |p| {
                    let sign = if p % 2 == 0 {
                        Scalar::one()
                    } else {
                        Scalar::from_int(-1)
                    };
                    sign * binomial(n, p as u64) * z.pow(n - p)
                },
            ))
        }
    }
}

/// The windowed expansion of `(x₁ − x₂)^n` in descending powers of the
/// first variable: `Σ_{i≥0} (−1)^i C(n,i) x₁^{n−i} x₂^i`. The window ranges
/// over powers of `x₁`; each coefficient is a polynomial in `x₂`.
pub fn binom_expand_two_var(
    n: i64,
    lo: i64,
    hi: i64,
) -> Result<SeriesWindow<LaurentPolynomial<Scalar>>, FormalError> {
    if hi > n {
        return Err(FormalError::WindowOutsideSupport { lo, hi, bound: n });
    }
    Ok(SeriesWindow::from_fn(
        ExpansionDirection::AtInfinity,
        lo,
        hi,
        |p| {
            let i = n - p;
            let sign = if i % 2 == 0 {
                Scalar::one()
            } else {
                Scalar::from_int(-1)
            };
            LaurentPolynomial::monomial(i, sign * binomial(n, i as u64))
        },
    ))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn inverse_of_x_minus_one_descends() {
        // (x − 1)^{-1} → x^{-1} + x^{-2} + x^{-3}
        let w = binom_expand(BinomKind::XMinusZ, -1, &Scalar::one(), -3, -1).unwrap();
        for p in [-1, -2, -3] {
            assert_eq!(w.coeff(p).unwrap(), Scalar::one());
        }
        assert_eq!(w.direction(), ExpansionDirection::AtInfinity);
    }

    #[test]
    fn inverse_of_one_minus_x_ascends() {
        // (1 − x)^{-1} → 1 + x + x²
        let w = binom_expand(BinomKind::ZMinusX, -1, &Scalar::one(), 0, 2).unwrap();
        for p in [0, 1, 2] {
            assert_eq!(w.coeff(p).unwrap(), Scalar::one());
        }
        assert_eq!(w.direction(), ExpansionDirection::AtZero);
    }

    #[test]
    fn nonnegative_powers_are_plain_polynomials() {
        // (x − 1)² = x² − 2x + 1 under both conventions.
        let desc = binom_expand(BinomKind::XMinusZ, 2, &Scalar::one(), 0, 2).unwrap();
        assert_eq!(desc.coeff(2).unwrap(), Scalar::one());
        assert_eq!(desc.coeff(1).unwrap(), Scalar::from_int(-2));
        assert_eq!(desc.coeff(0).unwrap(), Scalar::one());
        // (1 − x)² = (x − 1)², same coefficients.
        let asc = binom_expand(BinomKind::ZMinusX, 2, &Scalar::one(), 0, 2).unwrap();
        for p in 0..=2 {
            assert_eq!(asc.coeff(p).unwrap(), desc.coeff(p).unwrap());
        }
    }

    #[test]
    fn windows_cannot_cross_the_support_bound() {
        assert!(matches!(
            binom_expand(BinomKind::XMinusZ, -1, &Scalar::one(), -2, 0),
            Err(FormalError::WindowOutsideSupport { bound: -1, .. })
        ));
        assert!(matches!(
            binom_expand(BinomKind::ZMinusX, -1, &Scalar::one(), -1, 2),
            Err(FormalError::WindowOutsideSupport { bound: 0, .. })
        ));
        assert!(matches!(
            binom_expand(BinomKind::XMinusZ, -1, &Scalar::zero(), -2, -1),
            Err(FormalError::ZeroPoleLocation)
        ));
    }

    #[test]
    fn two_variable_expansion_alternates_signs() {
        // (x₁ − x₂)^{-1} = x₁^{-1} + x₂ x₁^{-2} + x₂² x₁^{-3} + …
        let w = binom_expand_two_var(-1, -3, -1).unwrap();
        for p in [-1i64, -2, -3] {
            let i = -1 - p;
            let c = w.coeff(p).unwrap();
            assert_eq!(c.coeff(i), Scalar::one());
            assert_eq!(c.term_count(), 1);
        }
        // (x₁ − x₂)² at x₁-power 1 → −2 x₂.
        let sq = binom_expand_two_var(2, 0, 2).unwrap();
        assert_eq!(sq.coeff(1).unwrap().coeff(1), Scalar::from_int(-2));
    }
}
