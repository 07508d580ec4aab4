use std::fmt;

use core_linalg::{binomial, Scalar};

use crate::laurent::poly_div_linear;
use crate::{
    shift_substitute_poly, ExpansionDirection, FormalError, LaurentPolynomial, SeriesWindow,
};

/// An exactly represented rational function `g(x) / (x^l (x−z)^k)` whose
/// poles are confined to `0` and one fixed nonzero point `z`.
///
/// The representation is canonical: `g` is a plain polynomial (no negative
/// powers), `x ∤ g` whenever `l > 0`, and `(x−z) ∤ g` whenever `k > 0`.
/// Equality is therefore decidable structurally (the stored `z` is ignored
/// when `k = 0`, where it is irrelevant to the function).
///
/// The two expansion maps [`Self::iota_zero`] and [`Self::iota_infty`]
/// produce the Laurent expansions at `0` (ascending powers, supported in
/// `[−l, ∞)`) and at `∞` (descending powers, supported in
/// `(−∞, deg g − l − k]`). Both are injective and `ℚ[x, x^{-1}]`-linear, and
/// they genuinely differ on functions with a pole at `z`: the discrepancy
/// window `ι₀f − ι∞f` is what the residue bookkeeping downstream consumes.
#[derive(Clone)]
pub struct RationalFunctionWithPoles {
    numerator: LaurentPolynomial<Scalar>,
    pole_at_zero: u32,
    pole_at_z: u32,
    z: Scalar,
}

/// `(x − z)^j` as a polynomial, `j ≥ 0`.
fn linear_power(z: &Scalar, j: u32) -> LaurentPolynomial<Scalar> {
    let mut out = LaurentPolynomial::zero();
    for i in 0..=(j as i64) {
        out.add_to(j as i64 - i, &(binomial(j as i64, i as u64) * (-z).pow(i)));
    }
    out
}

impl RationalFunctionWithPoles {
    /// Builds and canonicalizes `numerator / (x^l (x−z)^k)`.
    ///
    /// Negative powers in the supplied numerator are folded into the pole
    /// order at `0`; common factors of `x` and `(x−z)` are then cancelled.
    /// The zero function canonicalizes to `0 / 1`.
    pub fn new(
        numerator: LaurentPolynomial<Scalar>,
        l: u32,
        k: u32,
        z: Scalar,
    ) -> Result<Self, FormalError> {
        if z.is_zero() {
            return Err(FormalError::ZeroPoleLocation);
        }
        if numerator.is_zero() {
            return Ok(RationalFunctionWithPoles {
                numerator,
                pole_at_zero: 0,
                pole_at_z: 0,
                z,
            });
        }
        let mut g = numerator;
        let mut l = l as i64;
        let k = k as i64;
        // Fold negative numerator powers into the pole order at 0.
        let min = g.min_power().expect("nonzero polynomial");
        if min < 0 {
            g = g.shift_power(-min);
            l -= min;
        }
        // Cancel x | g against the pole at 0 …
        while l > 0 && g.coeff(0).is_zero() {
            g = g.shift_power(-1);
            l -= 1;
        }
        // … and (x − z) | g against the pole at z.
        let mut k = k;
        while k > 0 {
            let (q, rem) = poly_div_linear(&g, &z);
            if !rem.is_zero() {
                break;
            }
            g = q;
            k -= 1;
        }
        Ok(RationalFunctionWithPoles {
            numerator: g,
            pole_at_zero: l as u32,
            pole_at_z: k as u32,
            z,
        })
    }

    /// The zero function (pole location kept for later arithmetic).
    pub fn zero(z: Scalar) -> Result<Self, FormalError> {
        Self::new(LaurentPolynomial::zero(), 0, 0, z)
    }

    /// The canonical numerator `g`.
    pub fn numerator(&self) -> &LaurentPolynomial<Scalar> {
        &self.numerator
    }

    /// Pole order `l` at `0`.
    pub fn pole_order_at_zero(&self) -> u32 {
        self.pole_at_zero
    }

    /// Pole order `k` at `z`.
    pub fn pole_order_at_z(&self) -> u32 {
        self.pole_at_z
    }

    /// The nonzero pole location `z`.
    pub fn z(&self) -> &Scalar {
        &self.z
    }

    /// `true` iff the function is identically zero.
    pub fn is_zero(&self) -> bool {
        self.numerator.is_zero()
    }

    /// Degree of the numerator (`None` for the zero function).
    pub fn numerator_degree(&self) -> Option<i64> {
        self.numerator.max_power()
    }

    /// Top power of the expansion at `∞`: `deg g − l − k` (`None` for zero).
    pub fn upper_support_bound(&self) -> Option<i64> {
        self.numerator_degree()
            .map(|d| d - self.pole_at_zero as i64 - self.pole_at_z as i64)
    }

    /// Bottom power of the expansion at `0`: `−l`.
    pub fn lower_support_bound(&self) -> i64 {
        -(self.pole_at_zero as i64)
    }

    fn common_z(&self, other: &Self) -> Result<Scalar, FormalError> {
        match (self.pole_at_z > 0, other.pole_at_z > 0) {
            (true, true) if self.z != other.z => Err(FormalError::PoleMismatch {
                a: self.z.to_string(),
                b: other.z.to_string(),
            }),
            (_, true) => Ok(other.z.clone()),
            _ => Ok(self.z.clone()),
        }
    }

    /// `self + other`. Errors when both terms carry poles at distinct
    /// nonzero locations.
    pub fn add(&self, other: &Self) -> Result<Self, FormalError> {
        let z = self.common_z(other)?;
        let l = self.pole_at_zero.max(other.pole_at_zero);
        let k = self.pole_at_z.max(other.pole_at_z);
        let lift = |f: &Self| -> LaurentPolynomial<Scalar> {
            f.numerator
                .shift_power((l - f.pole_at_zero) as i64)
                .mul(&linear_power(&z, k - f.pole_at_z))
        };
        Self::new(lift(self).add(&lift(other)), l, k, z)
    }

    /// `self − other`.
    pub fn sub(&self, other: &Self) -> Result<Self, FormalError> {
        self.add(&other.scale(&Scalar::from_int(-1)))
    }

    /// `s · self`.
    pub fn scale(&self, s: &Scalar) -> Self {
        // Scaling cannot create or destroy common factors unless s = 0.
        let numerator = self.numerator.scale(s);
        if numerator.is_zero() {
            return RationalFunctionWithPoles {
                numerator,
                pole_at_zero: 0,
                pole_at_z: 0,
                z: self.z.clone(),
            };
        }
        RationalFunctionWithPoles {
            numerator,
            ..self.clone()
        }
    }

    /// `self · other`. Same pole-location rule as [`Self::add`].
    pub fn mul(&self, other: &Self) -> Result<Self, FormalError> {
        let z = self.common_z(other)?;
        Self::new(
            self.numerator.mul(&other.numerator),
            self.pole_at_zero + other.pole_at_zero,
            self.pole_at_z + other.pole_at_z,
            z,
        )
    }

    /// Multiplies by a Laurent polynomial (negative powers feed the pole at
    /// `0`).
    pub fn mul_laurent(&self, p: &LaurentPolynomial<Scalar>) -> Result<Self, FormalError> {
        Self::new(
            self.numerator.mul(p),
            self.pole_at_zero,
            self.pole_at_z,
            self.z.clone(),
        )
    }

    /// Exact evaluation at a scalar point away from the poles.
    pub fn evaluate(&self, x0: &Scalar) -> Result<Scalar, FormalError> {
        if (x0.is_zero() && self.pole_at_zero > 0) || (*x0 == self.z && self.pole_at_z > 0) {
            return Err(FormalError::EvaluationAtPole { at: x0.to_string() });
        }
        let denom = x0.pow(self.pole_at_zero as i64)
            * (x0 - &self.z).pow(self.pole_at_z as i64);
        Ok(self.numerator.eval(x0) / denom)
    }

    /// Coefficient of `x^i` in the ascending expansion of `(x−z)^{-k}`:
    /// `(−1)^k (−1)^i z^{−k−i} C(−k, i)` for `i ≥ 0`, zero below.
    fn pole_expansion_at_zero(&self, i: i64) -> Scalar {
        if i < 0 {
            return Scalar::zero();
        }
        let k = self.pole_at_z as i64;
        let sign = if (k + i) % 2 == 0 {
            Scalar::one()
        } else {
            Scalar::from_int(-1)
        };
        sign * self.z.pow(-k - i) * binomial(-k, i as u64)
    }

    /// Coefficient of `x^m` in the descending expansion of `(x−z)^{-k}`:
    /// `C(−k, i) (−z)^i` with `i = −k − m ≥ 0`, zero above `−k`.
    fn pole_expansion_at_infinity(&self, m: i64) -> Scalar {
        let k = self.pole_at_z as i64;
        let i = -k - m;
        if i < 0 {
            return Scalar::zero();
        }
        binomial(-k, i as u64) * (-&self.z).pow(i)
    }

    /// The expansion at `0` on the window `[lo, hi]` (ascending powers).
    ///
    /// # Errors
    ///
    /// Requests reaching below the support floor `−l` are refused.
    pub fn iota_zero(&self, lo: i64, hi: i64) -> Result<SeriesWindow<Scalar>, FormalError> {
        if lo < self.lower_support_bound() {
            return Err(FormalError::WindowOutsideSupport {
                lo,
                hi,
                bound: self.lower_support_bound(),
            });
        }
        let l = self.pole_at_zero as i64;
        Ok(SeriesWindow::from_fn(
            ExpansionDirection::AtZero,
            lo,
            hi,
            |p| {
                let mut acc = Scalar::zero();
                for (j, gj) in self.numerator.iter() {
                    acc += gj * &self.pole_expansion_at_zero(p + l - j);
                }
                acc
            },
        ))
    }

    /// The expansion at `∞` on the window `[lo, hi]` (descending powers).
    ///
    /// The support ceiling is `deg g − l − k`; a window extending above it
    /// is filled with explicit (provable) zeros, so the two expansions of
    /// the same function can always be compared on a common window.
    pub fn iota_infty(&self, lo: i64, hi: i64) -> Result<SeriesWindow<Scalar>, FormalError> {
        let l = self.pole_at_zero as i64;
        Ok(SeriesWindow::from_fn(
            ExpansionDirection::AtInfinity,
            lo,
            hi,
            |p| {
                let mut acc = Scalar::zero();
                for (j, gj) in self.numerator.iter() {
                    acc += gj * &self.pole_expansion_at_infinity(p + l - j);
                }
                acc
            },
        ))
    }

    /// Exact substitution `x ↦ x + z0`.
    ///
    /// The poles move from `{0, z}` to `{−z0, z−z0}`; the result must again
    /// have its poles inside `{0, z'}` for a single nonzero `z'`, which
    /// holds in particular for `z0 = 0` (identity) and `z0 = z` (the two
    /// poles trade places, `z' = −z`). A shift that would scatter two
    /// distinct nonzero poles is refused.
    pub fn shift_substitute(&self, z0: &Scalar) -> Result<Self, FormalError> {
        if z0.is_zero() {
            return Ok(self.clone());
        }
        let g = shift_substitute_poly(&self.numerator, z0)
            .expect("canonical numerator has no negative powers");
        // Pole candidates after the shift, with their orders.
        let at_minus_z0 = (-z0, self.pole_at_zero);
        let at_z_minus_z0 = (&self.z - z0, self.pole_at_z);
        let mut l_new = 0u32;
        let mut nonzero: Vec<(Scalar, u32)> = Vec::new();
        for (loc, order) in [at_minus_z0, at_z_minus_z0] {
            if order == 0 {
                continue;
            }
            if loc.is_zero() {
                l_new += order;
            } else {
                nonzero.push((loc, order));
            }
        }
        if nonzero.len() > 1 {
            return Err(FormalError::UnsupportedShift {
                z0: z0.to_string(),
                detail: format!(
                    "would leave poles at both {} and {}",
                    nonzero[0].0, nonzero[1].0
                ),
            });
        }
        let (z_new, k_new) = match nonzero.pop() {
            Some((loc, order)) => (loc, order),
            None => {
                // No nonzero pole survives; keep a valid placeholder z.
                let candidate = -z0;
                let z = if candidate.is_zero() {
                    &self.z - z0
                } else {
                    candidate
                };
                (z, 0)
            }
        };
        Self::new(g, l_new, k_new, z_new)
    }
}

impl PartialEq for RationalFunctionWithPoles {
    fn eq(&self, other: &Self) -> bool {
        self.numerator == other.numerator
            && self.pole_at_zero == other.pole_at_zero
            && self.pole_at_z == other.pole_at_z
            && (self.pole_at_z == 0 || self.z == other.z)
    }
}

impl Eq for RationalFunctionWithPoles {}

impl fmt::Debug for RationalFunctionWithPoles {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({:?})", self.numerator)?;
        if self.pole_at_zero > 0 {
            write!(f, " / x^{}", self.pole_at_zero)?;
        }
        if self.pole_at_z > 0 {
            write!(f, " / (x - {})^{}", self.z, self.pole_at_z)?;
        }
        Ok(())
    }
}

/// Inverts the expansion at `∞` given a pole certificate: the claim that
/// `x^l (x−z)^k · s` is a polynomial of degree at most `degree_bound`.
///
/// The window top of `s` is part of the certificate — it asserts that no
/// higher powers occur in the full series. The low side is *verified*: the
/// product's coefficients at every negative power the window can reach are
/// computed, and any nonzero value falsifies the certificate and aborts the
/// reconstruction, as does a nonzero coefficient above `degree_bound`. The
/// result is canonical, hence independent of extra window slack.
///
/// # Errors
///
/// * the series must be expanded at `∞`;
/// * the window must reach low enough to compute the product at power `0`
///   (`lo + l + k ≤ 0`);
/// * certificate violations report the offending power and value.
pub fn rational_from_upper_expansion(
    s: &SeriesWindow<Scalar>,
    l: u32,
    k: u32,
    z: &Scalar,
    degree_bound: i64,
) -> Result<RationalFunctionWithPoles, FormalError> {
    if s.direction() != ExpansionDirection::AtInfinity {
        return Err(FormalError::DirectionMismatch {
            expected: ExpansionDirection::AtInfinity.label(),
            got: s.direction().label(),
        });
    }
    if z.is_zero() {
        return Err(FormalError::ZeroPoleLocation);
    }
    let (s_lo, s_hi) = s.window();
    let shift = (l + k) as i64;
    if s_lo + shift > 0 {
        return Err(FormalError::InsufficientWindow {
            available: s_lo,
            needed: -shift,
        });
    }
    // Coefficients of T = x^l (x−z)^k · s, reading s as zero above its
    // window top (that is the certified support bound).
    let t_coeff = |p: i64| -> Scalar {
        let mut acc = Scalar::zero();
        for j in 0..=(k as i64) {
            let q = p - shift + j;
            if q > s_hi {
                continue;
            }
            let sc = s.coeff(q).expect("q >= s_lo by construction");
            acc += binomial(k as i64, j as u64) * (-z).pow(j) * sc;
        }
        acc
    };
    let top = (s_hi + shift).max(degree_bound);
    let mut g = LaurentPolynomial::zero();
    for p in (s_lo + shift)..=top {
        let c = t_coeff(p);
        if c.is_zero() {
            continue;
        }
        if p < 0 || p > degree_bound {
            return Err(FormalError::ReconstructionInconsistency {
                l,
                k,
                power: p,
                value: c.to_string(),
            });
        }
        g.add_to(p, &c);
    }
    RationalFunctionWithPoles::new(g, l, k, z.clone())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn poly(terms: &[(i64, i64)]) -> LaurentPolynomial<Scalar> {
        LaurentPolynomial::from_terms(terms.iter().map(|&(p, c)| (p, Scalar::from_int(c))))
    }

    fn one_over_x_plus_1() -> RationalFunctionWithPoles {
        RationalFunctionWithPoles::new(poly(&[(0, 1)]), 0, 1, Scalar::from_int(-1)).unwrap()
    }

    #[test]
    fn canonicalization_cancels_both_pole_factors() {
        // x(x−2) / (x²(x−2)³) canonicalizes to 1 / (x (x−2)²).
        let g = poly(&[(1, 1)]).mul(&poly(&[(1, 1), (0, -2)]));
        let f = RationalFunctionWithPoles::new(g, 2, 3, Scalar::from_int(2)).unwrap();
        assert_eq!(f.pole_order_at_zero(), 1);
        assert_eq!(f.pole_order_at_z(), 2);
        assert_eq!(*f.numerator(), poly(&[(0, 1)]));
    }

    #[test]
    fn negative_numerator_powers_fold_into_the_zero_pole() {
        // (x^{-2} + x^{-1}) / 1 = (1 + x) / x².
        let f =
            RationalFunctionWithPoles::new(poly(&[(-2, 1), (-1, 1)]), 0, 0, Scalar::one()).unwrap();
        assert_eq!(f.pole_order_at_zero(), 2);
        assert_eq!(*f.numerator(), poly(&[(0, 1), (1, 1)]));
    }

    #[test]
    fn expansion_at_zero_is_the_geometric_series() {
        let w = one_over_x_plus_1().iota_zero(0, 3).unwrap();
        for p in 0..=3 {
            let expect = Scalar::from_int(if p % 2 == 0 { 1 } else { -1 });
            assert_eq!(w.coeff(p).unwrap(), expect);
        }
        // 1/x expands to exactly x^{-1}.
        let inv_x = RationalFunctionWithPoles::new(poly(&[(0, 1)]), 1, 0, Scalar::one()).unwrap();
        let w = inv_x.iota_zero(-1, 2).unwrap();
        assert_eq!(w.coeff(-1).unwrap(), Scalar::one());
        for p in 0..=2 {
            assert_eq!(w.coeff(p).unwrap(), Scalar::zero());
        }
        // Requests below −l are refused.
        assert!(matches!(
            inv_x.iota_zero(-2, 0),
            Err(FormalError::WindowOutsideSupport { bound: -1, .. })
        ));
    }

    #[test]
    fn expansion_at_infinity_alternates() {
        let w = one_over_x_plus_1().iota_infty(-3, -1).unwrap();
        assert_eq!(w.coeff(-1).unwrap(), Scalar::one());
        assert_eq!(w.coeff(-2).unwrap(), Scalar::from_int(-1));
        assert_eq!(w.coeff(-3).unwrap(), Scalar::one());
        // Above the support ceiling the coefficients are explicit zeros.
        let padded = one_over_x_plus_1().iota_infty(-2, 1).unwrap();
        assert_eq!(padded.coeff(0).unwrap(), Scalar::zero());
        assert_eq!(padded.coeff(1).unwrap(), Scalar::zero());
    }

    #[test]
    fn both_expansions_agree_on_polynomials() {
        let f = RationalFunctionWithPoles::new(poly(&[(2, 3), (0, -1)]), 0, 0, Scalar::one())
            .unwrap();
        let at0 = f.iota_zero(0, 2).unwrap();
        let atoo = f.iota_infty(0, 2).unwrap();
        for p in 0..=2 {
            assert_eq!(at0.coeff(p).unwrap(), atoo.coeff(p).unwrap());
        }
    }

    #[test]
    fn the_two_expansions_differ_by_one_at_power_zero() {
        // For 1/(x+1): ι₀ has 1 at power 0, ι∞ has 0 there.
        let f = one_over_x_plus_1();
        let a = f.iota_zero(0, 0).unwrap().coeff(0).unwrap();
        let b = f.iota_infty(-4, 0).unwrap().coeff(0).unwrap();
        assert_eq!(a - b, Scalar::one());
    }

    #[test]
    fn reconstruction_inverts_the_geometric_series() {
        let s = one_over_x_plus_1().iota_infty(-5, -1).unwrap();
        let f = rational_from_upper_expansion(&s, 0, 1, &Scalar::from_int(-1), 0).unwrap();
        assert_eq!(f, one_over_x_plus_1());
    }

    #[test]
    fn reconstruction_of_a_constant_is_the_constant() {
        let mut s = SeriesWindow::zero(ExpansionDirection::AtInfinity, -2, 0);
        s.set(0, Scalar::from_int(5));
        let f = rational_from_upper_expansion(&s, 0, 0, &Scalar::from_int(-1), 0).unwrap();
        assert_eq!(*f.numerator(), poly(&[(0, 5)]));
        assert_eq!(f.pole_order_at_zero(), 0);
        assert_eq!(f.pole_order_at_z(), 0);
    }

    #[test]
    fn reconstruction_round_trips_a_double_pole() {
        // x / (x−2)², expanded then reconstructed.
        let f = RationalFunctionWithPoles::new(poly(&[(1, 1)]), 0, 2, Scalar::from_int(2)).unwrap();
        let top = f.upper_support_bound().unwrap();
        let s = f.iota_infty(top - 8, top).unwrap();
        let back = rational_from_upper_expansion(&s, 0, 2, &Scalar::from_int(2), 1).unwrap();
        assert_eq!(back, f);
        // Extra slack must not change the result.
        let s2 = f.iota_infty(top - 15, top).unwrap();
        let back2 = rational_from_upper_expansion(&s2, 0, 2, &Scalar::from_int(2), 1).unwrap();
        assert_eq!(back2, f);
    }

    #[test]
    fn false_certificates_are_caught() {
        let s = one_over_x_plus_1().iota_infty(-5, -1).unwrap();
        // Claiming no pole at z at all leaves nonzero negative coefficients.
        let err = rational_from_upper_expansion(&s, 0, 0, &Scalar::from_int(-1), 0).unwrap_err();
        assert!(matches!(
            err,
            FormalError::ReconstructionInconsistency { power, .. } if power < 0
        ));
        // Understating the window top hides real terms: the claim that −2
        // bounds the support of 1/(x+1) at ∞ is falsified at power −1.
        let short = one_over_x_plus_1().iota_infty(-5, -1).unwrap();
        let short = short.restrict(-5, -2).unwrap();
        assert!(matches!(
            rational_from_upper_expansion(&short, 0, 1, &Scalar::from_int(-1), 0),
            Err(FormalError::ReconstructionInconsistency { power: -1, .. })
        ));
        // A window that cannot reach power 0 is insufficient, not wrong.
        let stub = SeriesWindow::zero(ExpansionDirection::AtInfinity, 1, 3);
        assert!(matches!(
            rational_from_upper_expansion(&stub, 0, 1, &Scalar::from_int(-1), 0),
            Err(FormalError::InsufficientWindow { .. })
        ));
    }

    #[test]
    fn shifting_relocates_poles() {
        // 1/x under x ↦ x + 1 becomes 1/(x+1).
        let inv_x = RationalFunctionWithPoles::new(poly(&[(0, 1)]), 1, 0, Scalar::from_int(-1))
            .unwrap();
        let shifted = inv_x.shift_substitute(&Scalar::one()).unwrap();
        assert_eq!(shifted, one_over_x_plus_1());
        // Round trip z0 then −z0.
        let back = shifted.shift_substitute(&Scalar::from_int(-1)).unwrap();
        assert_eq!(back, inv_x);
        // 1/(x(x−1)) shifted by 1/2 would have poles at ±1/2: refused.
        let f = RationalFunctionWithPoles::new(poly(&[(0, 1)]), 1, 1, Scalar::one()).unwrap();
        assert!(matches!(
            f.shift_substitute(&Scalar::ratio(1, 2)),
            Err(FormalError::UnsupportedShift { .. })
        ));
    }

    #[test]
    fn arithmetic_matches_pointwise_evaluation() {
        let f = RationalFunctionWithPoles::new(poly(&[(1, 2), (0, 1)]), 1, 1, Scalar::from_int(-1))
            .unwrap();
        let g = RationalFunctionWithPoles::new(poly(&[(2, 1)]), 0, 2, Scalar::from_int(-1))
            .unwrap();
        let sum = f.add(&g).unwrap();
        let prod = f.mul(&g).unwrap();
        for x0 in [2i64, 3, 5, -4] {
            let x0 = Scalar::from_int(x0);
            assert_eq!(
                sum.evaluate(&x0).unwrap(),
                f.evaluate(&x0).unwrap() + g.evaluate(&x0).unwrap()
            );
            assert_eq!(
                prod.evaluate(&x0).unwrap(),
                f.evaluate(&x0).unwrap() * g.evaluate(&x0).unwrap()
            );
        }
        assert!(f.evaluate(&Scalar::from_int(-1)).is_err());
        assert!(f.evaluate(&Scalar::zero()).is_err());
    }
}
