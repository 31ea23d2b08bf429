//! Exact integers, rationals and outward-rounded decimal intervals.
//!
//! Every quantity computed elsewhere in the crate is either an exact
//! [`Rational`] or an [`Interval`] guaranteed to contain the exact value.

mod interval;
mod isqrt;
mod rational;

pub use interval::{interval_arith, interval_sqrt, make_interval, side_of, ArithOp, Interval, Side};
pub use isqrt::{isqrt_ceil, isqrt_floor};
pub use rational::{pi_reference, Rational};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Signed;

/// Direction used when dropping decimal digits.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Rounding {
    /// Toward −∞.
    Floor,
    /// Toward +∞.
    Ceil,
    /// To nearest, ties away from zero.
    Nearest,
}

pub(crate) fn pow10(p: u32) -> BigInt {
    BigInt::from(10u32).pow(p)
}

pub(crate) fn div_rounded(a: &BigInt, b: &BigInt, mode: Rounding) -> BigInt {
    debug_assert!(b.is_positive());
    match mode {
        Rounding::Floor => a.div_floor(b),
        Rounding::Ceil => -((-a).div_floor(b)),
        Rounding::Nearest => {
            let twice: BigInt = a * 2;
            if a.is_negative() {
                -((-twice + b).div_floor(&(b * 2)))
            } else {
                (twice + b).div_floor(&(b * 2))
            }
        }
    }
}

/// Re-expresses `mantissa · 10^(−from)` with `to` fractional digits.
pub(crate) fn rescale(mantissa: &BigInt, from: u32, to: u32, mode: Rounding) -> BigInt {
    if to >= from {
        mantissa * pow10(to - from)
    } else {
        div_rounded(mantissa, &pow10(from - to), mode)
    }
}

/// Renders `mantissa · 10^(−scale)` as a plain decimal string.
pub(crate) fn format_scaled(mantissa: &BigInt, scale: u32) -> String {
    let digits = mantissa.abs().to_string();
    let sign = if mantissa.is_negative() { "-" } else { "" };
    if scale == 0 {
        return format!("{sign}{digits}");
    }
    let scale = scale as usize;
    let padded = if digits.len() <= scale {
        format!("{}{}", "0".repeat(scale + 1 - digits.len()), digits)
    } else {
        digits
    };
    let (int, frac) = padded.split_at(padded.len() - scale);
    format!("{sign}{int}.{frac}")
}
