use std::fmt;
use std::iter::Sum;
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};
use std::str::FromStr;

use num::bigint::BigInt;
use num::rational::BigRational;
use num::{One, Signed, ToPrimitive, Zero};

use crate::LinalgError;

/// An exact rational scalar.
///
/// Thin wrapper around an arbitrary-precision rational that is always stored
/// in lowest terms with a positive denominator (the wrapped type maintains
/// this invariant on construction). Equality, ordering and hashing are
/// therefore equality of values, and printing is canonical: `p` for integers,
/// `p/q` otherwise.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Scalar(BigRational);

impl Scalar {
    /// The scalar `0`.
    pub fn zero() -> Self {
        Scalar(BigRational::zero())
    }

    /// The scalar `1`.
    pub fn one() -> Self {
        Scalar(BigRational::one())
    }

    /// The integer `n` as a scalar.
    pub fn from_int(n: i64) -> Self {
        Scalar(BigRational::from_integer(BigInt::from(n)))
    }

    /// The exact ratio `p/q`.
    ///
    /// # Panics
    ///
    /// Panics if `q == 0`.
    pub fn ratio(p: i64, q: i64) -> Self {
        assert!(q != 0, "zero denominator");
        Scalar(BigRational::new(BigInt::from(p), BigInt::from(q)))
    }

    /// Wraps an already-constructed rational.
    pub fn from_rational(r: BigRational) -> Self {
        Scalar(r)
    }

    /// Borrows the underlying rational.
    pub fn as_rational(&self) -> &BigRational {
        &self.0
    }

    /// `true` iff the value is `0`.
    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    /// `true` iff the value is `1`.
    pub fn is_one(&self) -> bool {
        self.0.is_one()
    }

    /// `true` iff the denominator is `1`.
    pub fn is_integer(&self) -> bool {
        self.0.is_integer()
    }

    /// `true` iff the value is strictly negative.
    pub fn is_negative(&self) -> bool {
        self.0.is_negative()
    }

    /// The value as an `i64`, when it is an integer that fits.
    pub fn to_i64(&self) -> Option<i64> {
        if !self.is_integer() {
            return None;
        }
        self.0.numer().to_i64()
    }

    /// Multiplicative inverse.
    ///
    /// # Panics
    ///
    /// Panics if the value is `0`.
    pub fn inv(&self) -> Self {
        assert!(!self.is_zero(), "inverse of zero");
        Scalar(self.0.recip())
    }

    /// Integer power, with negative exponents inverting.
    ///
    /// # Panics
    ///
    /// Panics when raising `0` to a negative power.
    pub fn pow(&self, exp: i64) -> Self {
        if exp >= 0 {
            Scalar(num::pow::pow(self.0.clone(), exp as usize))
        } else {
            self.inv().pow(-exp)
        }
    }
}

/// The binomial coefficient `C(n, k)` for integer `n` (possibly negative)
/// and natural `k`, via the falling-factorial formula
/// `n (n−1) ⋯ (n−k+1) / k!`. Always an integer.
pub(crate) fn binomial_impl(n: i64, k: u64) -> Scalar {
    let mut numer = BigInt::one();
    for j in 0..k {
        numer *= BigInt::from(n) - BigInt::from(j);
    }
    let mut denom = BigInt::one();
    for j in 1..=k {
        denom *= BigInt::from(j);
    }
    Scalar(BigRational::new(numer, denom))
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_integer() {
            write!(f, "{}", self.0.numer())
        } else {
            write!(f, "{}/{}", self.0.numer(), self.0.denom())
        }
    }
}

impl fmt::Debug for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for Scalar {
    type Err = LinalgError;

    /// Parses `p` or `p/q` with optional leading sign on `p`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = |reason: &str| LinalgError::BadRational {
            input: s.to_owned(),
            reason: reason.to_owned(),
        };
        let (p, q) = match s.split_once('/') {
            Some((p, q)) => (p, Some(q)),
            None => (s, None),
        };
        let numer: BigInt = p.trim().parse().map_err(|_| bad("bad numerator"))?;
        let denom: BigInt = match q {
            Some(q) => q.trim().parse().map_err(|_| bad("bad denominator"))?,
            None => BigInt::one(),
        };
        if denom.is_zero() {
            return Err(bad("zero denominator"));
        }
        Ok(Scalar(BigRational::new(numer, denom)))
    }
}

impl Default for Scalar {
    fn default() -> Self {
        Scalar::zero()
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident) => {
        impl $trait for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: Scalar) -> Scalar {
                Scalar(self.0.$method(rhs.0))
            }
        }
        impl $trait<&Scalar> for &Scalar {
            type Output = Scalar;
            fn $method(self, rhs: &Scalar) -> Scalar {
                Scalar((&self.0).$method(&rhs.0))
            }
        }
        impl $trait<&Scalar> for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: &Scalar) -> Scalar {
                Scalar(self.0.$method(&rhs.0))
            }
        }
    };
}

forward_binop!(Add, add);
forward_binop!(Sub, sub);
forward_binop!(Mul, mul);

impl Div for Scalar {
    type Output = Scalar;
    fn div(self, rhs: Scalar) -> Scalar {
        assert!(!rhs.is_zero(), "division by zero");
        Scalar(self.0 / rhs.0)
    }
}

impl Div<&Scalar> for &Scalar {
    type Output = Scalar;
    fn div(self, rhs: &Scalar) -> Scalar {
        assert!(!rhs.is_zero(), "division by zero");
        Scalar(&self.0 / &rhs.0)
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar(-self.0)
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar(-&self.0)
    }
}

impl AddAssign<&Scalar> for Scalar {
    fn add_assign(&mut self, rhs: &Scalar) {
        self.0 += &rhs.0;
    }
}

impl AddAssign for Scalar {
    fn add_assign(&mut self, rhs: Scalar) {
        self.0 += rhs.0;
    }
}

impl SubAssign<&Scalar> for Scalar {
    fn sub_assign(&mut self, rhs: &Scalar) {
        self.0 -= &rhs.0;
    }
}

impl MulAssign<&Scalar> for Scalar {
    fn mul_assign(&mut self, rhs: &Scalar) {
        self.0 *= &rhs.0;
    }
}

impl Sum for Scalar {
    fn sum<I: Iterator<Item = Scalar>>(iter: I) -> Scalar {
        let mut acc = Scalar::zero();
        for x in iter {
            acc += x;
        }
        acc
    }
}

/// The binomial coefficient `C(n, k)` for integer `n` (possibly negative)
/// and natural `k`.
///
/// For negative `n` this is the coefficient appearing in the binomial series
/// `(1+x)^n = Σ_k C(n,k) x^k`, e.g. `C(-1, k) = (-1)^k`.
pub fn binomial(n: i64, k: u64) -> Scalar {
    binomial_impl(n, k)
}

/// `k!` as a scalar.
pub fn factorial(k: u64) -> Scalar {
    let mut acc = BigInt::one();
    for j in 2..=k {
        acc *= BigInt::from(j);
    }
    Scalar(BigRational::from_integer(acc))
}
