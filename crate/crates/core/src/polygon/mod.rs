//! Inscribed and circumscribed polygon perimeters for a circle of unit
//! diameter, by repeated half-angle doubling from the triangle.
//!
//! Side counts are always `n = 3·2^k`. The half-angle `180°/n` is carried
//! only through its certified cosine and sine enclosures; no numeric angle
//! is ever formed.

mod radical;

pub use radical::{eval_radical, nested_radical_form, Factor, Perimeter, Radical, RadicalExpr, RadicalSign};

use num_bigint::BigInt;
use num_traits::Signed;

use crate::error::{Error, Result};
use crate::exactnum::{Interval, Rational};

/// Largest supported doubling count; keeps `3·2^k` inside a `u64`.
pub const MAX_DOUBLINGS: u32 = 60;

/// Default ceiling on working precision, in decimal digits.
pub const DEFAULT_MAX_PRECISION: u32 = 10_000;

/// Side count `3·2^k`.
pub fn sides(doublings: u32) -> u64 {
    3u64 << doublings
}

/// Inverse of [`sides`]; `None` unless `n = 3·2^k`.
pub fn doublings_for(n: u64) -> Option<u32> {
    if n == 0 || !n.is_multiple_of(3) || !(n / 3).is_power_of_two() {
        return None;
    }
    Some((n / 3).trailing_zeros())
}

/// Certified cosine and sine of the half-angle `180°/n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AngleState {
    doublings: u32,
    cos: Interval,
    sin: Interval,
}

impl AngleState {
    pub fn doublings(&self) -> u32 {
        self.doublings
    }

    pub fn sides(&self) -> u64 {
        sides(self.doublings)
    }

    /// Degree label of the half-angle, for display only.
    pub fn angle_label(&self) -> String {
        format!("180/{}", self.sides())
    }

    pub fn cos_enc(&self) -> &Interval {
        &self.cos
    }

    pub fn sin_enc(&self) -> &Interval {
        &self.sin
    }

    pub fn precision(&self) -> u32 {
        self.cos.precision()
    }

    /// Enclosure of `cos² + sin²`; always contains 1.
    pub fn pythagorean(&self) -> Interval {
        self.cos.square().add(&self.sin.square())
    }

    /// Sine recomputed as `√(1 − cos²)`.
    ///
    /// Loses digits to cancellation as the angle shrinks; used as a
    /// cross-check on the first few doublings.
    pub fn sin_from_cos(&self) -> Result<Interval> {
        let one = Interval::from_integer(1, self.precision());
        one.sub(&self.cos.square()).sqrt()
    }
}

/// Starting state for the triangle: `cos 60° = 1/2`, `sin 60° = √(3/4)`.
pub fn seed_state(precision: u32) -> AngleState {
    let half = Rational::new(1, 2).unwrap();
    let three_quarters = Rational::new(3, 4).unwrap();
    AngleState {
        doublings: 0,
        cos: Interval::from_rational(&half, precision),
        sin: Interval::from_rational(&three_quarters, precision)
            .sqrt()
            .expect("3/4 is positive"),
    }
}

/// One doubling step `n → 2n`.
///
/// `cos(x/2) = √((1 + cos x)/2)` and `sin(x/2) = sin x / (2·cos(x/2))`.
pub fn halve_angle(state: &AngleState) -> Result<AngleState> {
    if state.doublings >= MAX_DOUBLINGS {
        return Err(Error::ResourceLimit {
            needed: u64::from(state.doublings) + 1,
            limit: MAX_DOUBLINGS,
        });
    }
    let p = state.precision();
    let one = Interval::from_integer(1, p);
    let two = Interval::from_integer(2, p);
    let radicand = one.add(&state.cos).div(&two)?;
    if !radicand.lo_mantissa().is_positive() {
        return Err(Error::PrecisionExhausted("half-angle radicand reached zero"));
    }
    let cos = radicand.sqrt()?;
    if !cos.lo_mantissa().is_positive() {
        return Err(Error::PrecisionExhausted("half-angle cosine lost its sign"));
    }
    let sin = state.sin.div(&cos.mul_int(&BigInt::from(2)))?;
    if !sin.lo_mantissa().is_positive() {
        return Err(Error::PrecisionExhausted("half-angle sine lost its sign"));
    }
    Ok(AngleState {
        doublings: state.doublings + 1,
        cos,
        sin,
    })
}

/// Enclosures of the inscribed perimeter `c_n` and circumscribed perimeter
/// `C_n` for a circle of unit diameter.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PolygonBounds {
    pub doublings: u32,
    pub n: u64,
    pub lower: Interval,
    pub upper: Interval,
}

impl PolygonBounds {
    /// Working precision of the underlying enclosures.
    pub fn precision(&self) -> u32 {
        self.lower.precision()
    }
}

/// `c_n = n·sin(180°/n)` and `C_n = n·sin/cos`.
pub fn perimeters(state: &AngleState) -> Result<PolygonBounds> {
    if !state.cos.lo_mantissa().is_positive() {
        return Err(Error::PrecisionExhausted("cosine enclosure touches zero"));
    }
    let n = BigInt::from(state.sides());
    let lower = state.sin.mul_int(&n);
    let upper = state.sin.div(&state.cos)?.mul_int(&n);
    Ok(PolygonBounds {
        doublings: state.doublings,
        n: state.sides(),
        lower,
        upper,
    })
}

/// Runs the seed and `doublings` halvings at a fixed working precision.
pub fn bounds_at_precision(doublings: u32, precision: u32) -> Result<PolygonBounds> {
    let mut state = seed_state(precision);
    for _ in 0..doublings {
        state = halve_angle(&state)?;
    }
    perimeters(&state)
}

/// Bounds at `n = 3·2^doublings` with both enclosures narrower than
/// `10^(−digits)`, escalating precision up to [`DEFAULT_MAX_PRECISION`].
pub fn bounds_at(doublings: u32, digits: u32) -> Result<PolygonBounds> {
    bounds_at_capped(doublings, digits, DEFAULT_MAX_PRECISION)
}

/// As [`bounds_at`], with an explicit precision ceiling.
///
/// Starts at `digits + 10 + doublings` working digits and doubles on every
/// failure, recomputing from the seed each time.
pub fn bounds_at_capped(doublings: u32, digits: u32, max_precision: u32) -> Result<PolygonBounds> {
    if doublings > MAX_DOUBLINGS {
        return Err(Error::ResourceLimit {
            needed: u64::from(doublings),
            limit: MAX_DOUBLINGS,
        });
    }
    let mut p = u64::from(digits) + 10 + u64::from(doublings);
    loop {
        if p > u64::from(max_precision) {
            return Err(Error::ResourceLimit {
                needed: p,
                limit: max_precision,
            });
        }
        match bounds_at_precision(doublings, p as u32) {
            Ok(b) if b.lower.width_below(digits) && b.upper.width_below(digits) => return Ok(b),
            Ok(_) | Err(Error::PrecisionExhausted(_)) => p *= 2,
            Err(e) => return Err(e),
        }
    }
}
