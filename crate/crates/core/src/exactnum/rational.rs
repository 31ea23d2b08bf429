use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::{div_rounded, format_scaled, pow10, Rounding};
use crate::error::{Error, Result};

/// Exact ratio of unbounded integers, always stored reduced with a positive
/// denominator.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Rational(BigRational);

impl Rational {
    pub fn new(num: impl Into<BigInt>, den: impl Into<BigInt>) -> Result<Self> {
        let den = den.into();
        if den.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        Ok(Rational(BigRational::new(num.into(), den)))
    }

    pub fn from_integer(n: impl Into<BigInt>) -> Self {
        Rational(BigRational::from_integer(n.into()))
    }

    pub fn zero() -> Self {
        Rational(BigRational::zero())
    }

    pub fn one() -> Self {
        Rational(BigRational::one())
    }

    pub fn num(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn den(&self) -> &BigInt {
        self.0.denom()
    }

    pub fn is_positive(&self) -> bool {
        self.0.is_positive()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn abs(&self) -> Self {
        Rational(self.0.abs())
    }

    /// Largest integer not above the value.
    pub fn floor(&self) -> BigInt {
        self.0.floor().to_integer()
    }

    pub fn recip(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        Ok(Rational(self.0.recip()))
    }

    pub fn checked_div(&self, other: &Rational) -> Result<Self> {
        Ok(Rational(&self.0 * other.recip()?.0))
    }

    /// Value scaled by `10^digits` and rounded to an integer.
    pub fn scaled_mantissa(&self, digits: u32, mode: Rounding) -> BigInt {
        div_rounded(&(self.num() * pow10(digits)), self.den(), mode)
    }

    /// Decimal rendering with exactly `digits` fractional digits.
    pub fn to_decimal(&self, digits: u32, mode: Rounding) -> String {
        format_scaled(&self.scaled_mantissa(digits, mode), digits)
    }

    /// Same as [`Rational::to_decimal`] with an explicit leading `+` for
    /// non-negative values.
    pub fn to_signed_decimal(&self, digits: u32, mode: Rounding) -> String {
        let s = self.to_decimal(digits, mode);
        if s.starts_with('-') {
            s
        } else {
            format!("+{s}")
        }
    }

    /// `m · 10^(−scale)`.
    pub(crate) fn from_scaled(mantissa: BigInt, scale: u32) -> Self {
        Rational(BigRational::new(mantissa, pow10(scale)))
    }

    /// Compares `self` with `m · 10^(−scale)` without building a rational.
    pub(crate) fn cmp_scaled(&self, mantissa: &BigInt, scale: u32) -> Ordering {
        (self.num() * pow10(scale)).cmp(&(mantissa * self.den()))
    }
}

/// The twelve-decimal reference value 3.141592653589, for reports and tests.
///
/// Bound computations never read it.
pub fn pi_reference() -> Rational {
    Rational::from_scaled(BigInt::from(3_141_592_653_589u64), 12)
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.num(), self.den())
    }
}

impl From<i64> for Rational {
    fn from(n: i64) -> Self {
        Rational::from_integer(n)
    }
}

impl From<BigInt> for Rational {
    fn from(n: BigInt) -> Self {
        Rational::from_integer(n)
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident) => {
        impl $trait<&Rational> for &Rational {
            type Output = Rational;
            fn $method(self, rhs: &Rational) -> Rational {
                Rational((&self.0).$method(&rhs.0))
            }
        }
        impl $trait for Rational {
            type Output = Rational;
            fn $method(self, rhs: Rational) -> Rational {
                Rational(self.0.$method(rhs.0))
            }
        }
    };
}

forward_binop!(Add, add);
forward_binop!(Sub, sub);
forward_binop!(Mul, mul);

impl Neg for Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational(-self.0)
    }
}
