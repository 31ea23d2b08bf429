use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use super::isqrt::{isqrt_ceil, isqrt_floor};
use super::{div_rounded, format_scaled, pow10, rescale, Rational, Rounding};
use crate::error::{Error, Result};

/// Closed interval `[lo, hi]` with endpoints `lo · 10^(−p)` and `hi · 10^(−p)`.
///
/// Every operation rounds the lower endpoint toward −∞ and the upper
/// endpoint toward +∞, so the exact result for any points of the inputs
/// lies inside the output.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Interval {
    lo: BigInt,
    hi: BigInt,
    precision: u32,
}

/// Where a rational lies relative to an enclosure.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Side {
    /// Strictly below the lower endpoint.
    Below,
    /// Inside the closed interval; the comparison is not decided.
    Within,
    /// Strictly above the upper endpoint.
    Above,
}

impl Side {
    pub fn as_str(self) -> &'static str {
        match self {
            Side::Below => "below",
            Side::Within => "within",
            Side::Above => "above",
        }
    }
}

impl fmt::Display for Side {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Sub,
    Mul,
    Div,
}

impl Interval {
    /// Tightest enclosure of `q` with `p` fractional digits.
    pub fn from_rational(q: &Rational, p: u32) -> Self {
        Interval {
            lo: q.scaled_mantissa(p, Rounding::Floor),
            hi: q.scaled_mantissa(p, Rounding::Ceil),
            precision: p,
        }
    }

    pub fn from_integer(n: impl Into<BigInt>, p: u32) -> Self {
        let m = n.into() * pow10(p);
        Interval {
            lo: m.clone(),
            hi: m,
            precision: p,
        }
    }

    /// Builds an interval from raw mantissas; `None` unless `lo ≤ hi`.
    pub fn from_mantissas(lo: BigInt, hi: BigInt, p: u32) -> Option<Self> {
        (lo <= hi).then_some(Interval { lo, hi, precision: p })
    }

    pub fn precision(&self) -> u32 {
        self.precision
    }

    pub fn lo_mantissa(&self) -> &BigInt {
        &self.lo
    }

    pub fn hi_mantissa(&self) -> &BigInt {
        &self.hi
    }

    pub fn lo(&self) -> Rational {
        Rational::from_scaled(self.lo.clone(), self.precision)
    }

    pub fn hi(&self) -> Rational {
        Rational::from_scaled(self.hi.clone(), self.precision)
    }

    pub fn width(&self) -> Rational {
        Rational::from_scaled(&self.hi - &self.lo, self.precision)
    }

    pub fn midpoint(&self) -> Rational {
        Rational::from_scaled(&self.lo + &self.hi, self.precision) * Rational::new(1, 2).unwrap()
    }

    pub fn is_point(&self) -> bool {
        self.lo == self.hi
    }

    /// `hi − lo < 10^(−digits)`.
    pub fn width_below(&self, digits: u32) -> bool {
        if digits >= self.precision {
            return self.is_point();
        }
        &self.hi - &self.lo < pow10(self.precision - digits)
    }

    pub fn contains(&self, q: &Rational) -> bool {
        self.side_of(q) == Side::Within
    }

    pub fn contains_zero(&self) -> bool {
        !self.lo.is_positive() && !self.hi.is_negative()
    }

    pub fn side_of(&self, q: &Rational) -> Side {
        if q.cmp_scaled(&self.lo, self.precision) == Ordering::Less {
            Side::Below
        } else if q.cmp_scaled(&self.hi, self.precision) == Ordering::Greater {
            Side::Above
        } else {
            Side::Within
        }
    }

    /// Re-expresses the interval with `p` fractional digits, rounding outward.
    pub fn with_precision(&self, p: u32) -> Interval {
        Interval {
            lo: rescale(&self.lo, self.precision, p, Rounding::Floor),
            hi: rescale(&self.hi, self.precision, p, Rounding::Ceil),
            precision: p,
        }
    }

    pub fn is_subset_of(&self, other: &Interval) -> bool {
        let p = self.precision.max(other.precision);
        let (a, b) = (self.upscaled(p), other.upscaled(p));
        b.0 <= a.0 && a.1 <= b.1
    }

    pub fn overlaps(&self, other: &Interval) -> bool {
        let p = self.precision.max(other.precision);
        let (a, b) = (self.upscaled(p), other.upscaled(p));
        a.0 <= b.1 && b.0 <= a.1
    }

    fn upscaled(&self, p: u32) -> (BigInt, BigInt) {
        debug_assert!(p >= self.precision);
        let f = pow10(p - self.precision);
        (&self.lo * &f, &self.hi * &f)
    }

    fn aligned(&self, other: &Interval) -> (u32, (BigInt, BigInt), (BigInt, BigInt)) {
        let p = self.precision.max(other.precision);
        (p, self.upscaled(p), other.upscaled(p))
    }

    pub fn add(&self, other: &Interval) -> Interval {
        let (p, a, b) = self.aligned(other);
        Interval {
            lo: a.0 + b.0,
            hi: a.1 + b.1,
            precision: p,
        }
    }

    pub fn sub(&self, other: &Interval) -> Interval {
        let (p, a, b) = self.aligned(other);
        Interval {
            lo: a.0 - b.1,
            hi: a.1 - b.0,
            precision: p,
        }
    }

    pub fn neg(&self) -> Interval {
        Interval {
            lo: -&self.hi,
            hi: -&self.lo,
            precision: self.precision,
        }
    }

    pub fn mul(&self, other: &Interval) -> Interval {
        let (p, a, b) = self.aligned(other);
        let products = [&a.0 * &b.0, &a.0 * &b.1, &a.1 * &b.0, &a.1 * &b.1];
        let min = products.iter().min().unwrap();
        let max = products.iter().max().unwrap();
        let scale = pow10(p);
        Interval {
            lo: div_rounded(min, &scale, Rounding::Floor),
            hi: div_rounded(max, &scale, Rounding::Ceil),
            precision: p,
        }
    }

    /// Multiplication by an exact integer; no rounding is involved.
    pub fn mul_int(&self, n: &BigInt) -> Interval {
        let (x, y) = (&self.lo * n, &self.hi * n);
        let (lo, hi) = if n.is_negative() { (y, x) } else { (x, y) };
        Interval {
            lo,
            hi,
            precision: self.precision,
        }
    }

    /// `self²`, tighter than `self.mul(self)` when the interval straddles zero.
    pub fn square(&self) -> Interval {
        if self.contains_zero() {
            let m = self.lo.abs().max(self.hi.abs());
            let scale = pow10(self.precision);
            Interval {
                lo: BigInt::zero(),
                hi: div_rounded(&(&m * &m), &scale, Rounding::Ceil),
                precision: self.precision,
            }
        } else {
            self.mul(self)
        }
    }

    pub fn div(&self, other: &Interval) -> Result<Interval> {
        if other.contains_zero() {
            return Err(Error::DivisionByZeroInterval);
        }
        let (p, a, b) = self.aligned(other);
        let scale = pow10(p);
        let mut lo: Option<BigInt> = None;
        let mut hi: Option<BigInt> = None;
        for x in [&a.0, &a.1] {
            for y in [&b.0, &b.1] {
                // keep the divisor positive for directed division
                let (n, d) = if y.is_negative() {
                    (-(x * &scale), -y)
                } else {
                    (x * &scale, y.clone())
                };
                let f = div_rounded(&n, &d, Rounding::Floor);
                let c = div_rounded(&n, &d, Rounding::Ceil);
                lo = Some(lo.map_or(f.clone(), |l| l.min(f)));
                hi = Some(hi.map_or(c.clone(), |h| h.max(c)));
            }
        }
        Ok(Interval {
            lo: lo.unwrap(),
            hi: hi.unwrap(),
            precision: p,
        })
    }

    pub fn sqrt(&self) -> Result<Interval> {
        if self.lo.is_negative() {
            return Err(Error::NegativeRadicand);
        }
        let scale = pow10(self.precision);
        Ok(Interval {
            lo: isqrt_floor(&(&self.lo * &scale)),
            hi: isqrt_ceil(&(&self.hi * &scale)),
            precision: self.precision,
        })
    }

    /// Lower endpoint rounded down to `digits` fractional digits.
    pub fn lo_decimal(&self, digits: u32) -> String {
        format_scaled(&rescale(&self.lo, self.precision, digits, Rounding::Floor), digits)
    }

    /// Upper endpoint rounded up to `digits` fractional digits.
    pub fn hi_decimal(&self, digits: u32) -> String {
        format_scaled(&rescale(&self.hi, self.precision, digits, Rounding::Ceil), digits)
    }

    /// Midpoint rounded to nearest; a display value, not a bound.
    pub fn approx_decimal(&self, digits: u32) -> String {
        self.midpoint().to_decimal(digits, Rounding::Nearest)
    }
}

impl fmt::Display for Interval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "[{}, {}]",
            format_scaled(&self.lo, self.precision),
            format_scaled(&self.hi, self.precision)
        )
    }
}

pub fn make_interval(q: &Rational, p: u32) -> Interval {
    Interval::from_rational(q, p)
}

pub fn interval_arith(op: ArithOp, a: &Interval, b: &Interval) -> Result<Interval> {
    Ok(match op {
        ArithOp::Add => a.add(b),
        ArithOp::Sub => a.sub(b),
        ArithOp::Mul => a.mul(b),
        ArithOp::Div => a.div(b)?,
    })
}

pub fn interval_sqrt(a: &Interval) -> Result<Interval> {
    a.sqrt()
}

pub fn side_of(q: &Rational, iv: &Interval) -> Side {
    iv.side_of(q)
}
