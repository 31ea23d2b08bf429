//! Simple continued fractions of positive rationals, their convergents, and
//! certified rational bounds on π picked from those convergents.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exactnum::{Interval, Rational, Rounding, Side};
use crate::polygon::{bounds_at, PolygonBounds};

/// Coefficients `[a₀; a₁, …, a_m]` with `a₀ ≥ 0` and `a_i ≥ 1` after.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ContinuedFraction {
    coeffs: Vec<BigInt>,
}

impl ContinuedFraction {
    /// `None` if the coefficient constraints do not hold or the list is empty.
    pub fn from_coeffs(coeffs: Vec<BigInt>) -> Option<Self> {
        let (first, rest) = coeffs.split_first()?;
        let valid = *first >= BigInt::zero() && rest.iter().all(|a| *a >= BigInt::one());
        valid.then_some(ContinuedFraction { coeffs })
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }
}

impl fmt::Display for ContinuedFraction {
    /// `[3;7,7]`
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}", self.coeffs[0])?;
        for (i, a) in self.coeffs[1..].iter().enumerate() {
            f.write_str(if i == 0 { ";" } else { "," })?;
            write!(f, "{a}")?;
        }
        f.write_str("]")
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Convergent {
    pub index: usize,
    pub value: Rational,
}

/// Parses a plain positive decimal such as `3.14103195` into an exact rational.
///
/// An optional sign is accepted so that negative input is reported as
/// [`Error::NonPositiveValue`] rather than as malformed.
pub fn parse_decimal(s: &str) -> Result<Rational> {
    let malformed = || Error::MalformedDecimal(s.to_string());
    let (negative, body) = match s.as_bytes().first() {
        Some(b'-') => (true, &s[1..]),
        Some(b'+') => (false, &s[1..]),
        _ => (false, s),
    };
    let (int, frac) = body.split_once('.').unwrap_or((body, ""));
    let all_digits = |t: &str| t.bytes().all(|b| b.is_ascii_digit());
    if int.len() + frac.len() == 0 || !all_digits(int) || !all_digits(frac) {
        return Err(malformed());
    }
    let mantissa: BigInt = format!("{int}{frac}").parse().map_err(|_| malformed())?;
    let scale = u32::try_from(frac.len()).map_err(|_| malformed())?;
    let value = Rational::new(mantissa, BigInt::from(10u32).pow(scale))?;
    if negative || !value.is_positive() {
        return Err(Error::NonPositiveValue);
    }
    Ok(value)
}

/// Euclid's algorithm on `num/den`. Raw output: a trailing 1 is kept.
pub fn expand(q: &Rational) -> Result<ContinuedFraction> {
    if !q.is_positive() {
        return Err(Error::NonPositiveValue);
    }
    let (mut num, mut den) = (q.num().clone(), q.den().clone());
    let mut coeffs = Vec::new();
    while !den.is_zero() {
        let a = &num / &den;
        let r = &num - &a * &den;
        coeffs.push(a);
        num = den;
        den = r;
    }
    Ok(ContinuedFraction { coeffs })
}

/// `h_i = a_i·h_{i−1} + h_{i−2}`, `k_i = a_i·k_{i−1} + k_{i−2}`.
pub fn convergents(cf: &ContinuedFraction) -> Vec<Convergent> {
    let (mut h_prev, mut h) = (BigInt::zero(), BigInt::one());
    let (mut k_prev, mut k) = (BigInt::one(), BigInt::zero());
    cf.coeffs
        .iter()
        .enumerate()
        .map(|(index, a)| {
            let h_next = a * &h + &h_prev;
            let k_next = a * &k + &k_prev;
            h_prev = std::mem::replace(&mut h, h_next);
            k_prev = std::mem::replace(&mut k, k_next);
            Convergent {
                index,
                value: Rational::new(h.clone(), k.clone()).expect("k_i ≥ 1"),
            }
        })
        .collect()
}

/// `a₀ + 1/(a₁ + 1/(… + 1/a_m))`, folded from the innermost term.
pub fn reconstruct(cf: &ContinuedFraction) -> Rational {
    let (last, rest) = cf.coeffs.split_last().expect("non-empty");
    rest.iter().rev().fold(Rational::from_integer(last.clone()), |acc, a| {
        Rational::from_integer(a.clone()) + acc.recip().expect("tail is at least 1")
    })
}

/// A convergent tagged with where it falls against an enclosure.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Candidate {
    pub convergent: Convergent,
    pub side: Side,
}

/// Expansion of one end of a polygon enclosure and the verdict of every
/// convergent against that enclosure.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoundExpansion {
    /// The enclosure end rounded outward to the requested digits.
    pub decimal: Rational,
    pub digits: u32,
    pub expansion: ContinuedFraction,
    pub candidates: Vec<Candidate>,
}

/// Which perimeter enclosure feeds a continued-fraction expansion.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BoundSide {
    /// `c_n`: lower end rounded down; convergents must be certified below.
    Lower,
    /// `C_n`: upper end rounded up; convergents must be certified above.
    Upper,
}

impl BoundSide {
    fn required(self) -> Side {
        match self {
            BoundSide::Lower => Side::Below,
            BoundSide::Upper => Side::Above,
        }
    }

    fn enclosure(self, bounds: &PolygonBounds) -> &Interval {
        match self {
            BoundSide::Lower => &bounds.lower,
            BoundSide::Upper => &bounds.upper,
        }
    }
}

/// Truncates the chosen enclosure end to `digits` places and expands it.
pub fn expand_bound(bounds: &PolygonBounds, which: BoundSide, digits: u32) -> BoundExpansion {
    let enclosure = which.enclosure(bounds);
    let decimal = match which {
        BoundSide::Lower => enclosure.lo().scaled_mantissa(digits, Rounding::Floor),
        BoundSide::Upper => enclosure.hi().scaled_mantissa(digits, Rounding::Ceil),
    };
    let decimal = Rational::new(decimal, BigInt::from(10u32).pow(digits)).unwrap();
    let expansion = expand(&decimal).expect("perimeters are positive");
    let candidates = convergents(&expansion)
        .into_iter()
        .map(|c| Candidate {
            side: enclosure.side_of(&c.value),
            convergent: c,
        })
        .collect();
    BoundExpansion {
        decimal,
        digits,
        expansion,
        candidates,
    }
}

/// A certified pair `lower < π < upper` with the evidence behind it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RationalBounds {
    pub lower: Rational,
    pub upper: Rational,
    pub den_cap: u64,
    pub polygon: PolygonBounds,
    pub lower_expansion: BoundExpansion,
    pub upper_expansion: BoundExpansion,
}

fn pick(expansion: &BoundExpansion, which: BoundSide, den_cap: u64) -> Result<Rational> {
    let cap = BigInt::from(den_cap);
    expansion
        .candidates
        .iter()
        .filter(|c| c.side == which.required() && *c.convergent.value.den() <= cap)
        .max_by(|a, b| a.convergent.value.den().cmp(b.convergent.value.den()))
        .map(|c| c.convergent.value.clone())
        .ok_or(Error::NoValidBound {
            den_cap,
            side: which.required().as_str(),
        })
}

/// Selects, from already computed polygon bounds, the largest-denominator
/// convergent under `den_cap` on each certified side.
pub fn rational_bounds_from(polygon: PolygonBounds, digits: u32, den_cap: u64) -> Result<RationalBounds> {
    let lower_expansion = expand_bound(&polygon, BoundSide::Lower, digits);
    let upper_expansion = expand_bound(&polygon, BoundSide::Upper, digits);
    Ok(RationalBounds {
        lower: pick(&lower_expansion, BoundSide::Lower, den_cap)?,
        upper: pick(&upper_expansion, BoundSide::Upper, den_cap)?,
        den_cap,
        polygon,
        lower_expansion,
        upper_expansion,
    })
}

/// Rational bounds on π from the `3·2^doublings`-gon at `digits` places.
pub fn certified_rational_bounds(doublings: u32, digits: u32, den_cap: u64) -> Result<RationalBounds> {
    rational_bounds_from(bounds_at(doublings, digits)?, digits, den_cap)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::pi_reference;
    use proptest::prelude::*;

    fn r(n: i64, d: i64) -> Rational {
        Rational::new(n, d).unwrap()
    }

    fn coeffs(q: &Rational) -> Vec<i64> {
        expand(q)
            .unwrap()
            .coeffs()
            .iter()
            .map(|a| a.try_into().unwrap())
            .collect()
    }

    fn convergent_strings(q: &Rational) -> Vec<String> {
        convergents(&expand(q).unwrap())
            .iter()
            .map(|c| c.value.to_string())
            .collect()
    }

    // Plain i128 Euclid and convergent recurrence, independent of the BigInt path.
    fn oracle_convergents(mut num: i128, mut den: i128) -> Vec<(i128, i128)> {
        let (mut h0, mut h1, mut k0, mut k1) = (0i128, 1i128, 1i128, 0i128);
        let mut out = Vec::new();
        while den != 0 {
            let a = num / den;
            (num, den) = (den, num - a * den);
            (h0, h1) = (h1, a * h1 + h0);
            (k0, k1) = (k1, a * k1 + k0);
            out.push((h1, k1));
        }
        out
    }

    #[test]
    fn parses_decimals() {
        assert_eq!(parse_decimal("3.14").unwrap(), r(157, 50));
        assert_eq!(parse_decimal("3").unwrap(), r(3, 1));
        assert_eq!(parse_decimal("3.").unwrap(), r(3, 1));
        assert_eq!(parse_decimal(".5").unwrap(), r(1, 2));
        assert_eq!(parse_decimal("+0.25").unwrap(), r(1, 4));
        assert_eq!(parse_decimal("3.14103195").unwrap(), r(314103195, 100000000));
    }

    #[test]
    fn rejects_bad_decimals() {
        for s in ["", ".", "abc", "3.1.4", "1e5", "3,14", " 3", "--1", "3.14x"] {
            assert_eq!(parse_decimal(s), Err(Error::MalformedDecimal(s.into())), "{s:?}");
        }
        for s in ["0", "0.000", "-3.14", "-0"] {
            assert_eq!(parse_decimal(s), Err(Error::NonPositiveValue), "{s:?}");
        }
    }

    #[test]
    fn expansions() {
        assert_eq!(coeffs(&r(157, 50)), [3, 7, 7]);
        assert_eq!(coeffs(&r(314103195, 100000000)), [3, 7, 11, 25, 1, 25, 1, 27, 13]);
        assert_eq!(coeffs(&r(3, 1)), [3]);
        assert_eq!(coeffs(&r(2, 5)), [0, 2, 2]);
        assert_eq!(expand(&r(157, 50)).unwrap().to_string(), "[3;7,7]");
        assert_eq!(expand(&r(3, 1)).unwrap().to_string(), "[3]");
        assert_eq!(expand(&Rational::zero()), Err(Error::NonPositiveValue));
        assert_eq!(expand(&r(-1, 2)), Err(Error::NonPositiveValue));
    }

    #[test]
    fn convergent_sequences() {
        assert_eq!(convergent_strings(&r(157, 50)), ["3/1", "22/7", "157/50"]);
        let c96 = convergent_strings(&parse_decimal("3.14103195").unwrap());
        assert_eq!(c96[..4], ["3/1", "22/7", "245/78", "6147/1957"]);
        let big_c96 = convergent_strings(&parse_decimal("3.14271460").unwrap());
        assert_eq!(big_c96[..3], ["3/1", "22/7", "3149/1002"]);
        let zu = convergent_strings(&parse_decimal("3.14159267").unwrap());
        assert_eq!(zu[..4], ["3/1", "22/7", "333/106", "355/113"]);
        for (i, c) in convergents(&expand(&r(157, 50)).unwrap()).iter().enumerate() {
            assert_eq!(c.index, i);
        }
    }

    #[test]
    fn reconstructs() {
        let cf = ContinuedFraction::from_coeffs(vec![3.into(), 7.into(), 7.into()]).unwrap();
        assert_eq!(reconstruct(&cf), r(157, 50));
        assert_eq!(
            reconstruct(&ContinuedFraction::from_coeffs(vec![3.into()]).unwrap()),
            r(3, 1)
        );
        assert!(ContinuedFraction::from_coeffs(vec![]).is_none());
        assert!(ContinuedFraction::from_coeffs(vec![3.into(), 0.into()]).is_none());
        assert!(ContinuedFraction::from_coeffs(vec![(-1).into()]).is_none());
    }

    #[test]
    fn improved_archimedes_bound() {
        let b = certified_rational_bounds(5, 8, 100).unwrap();
        assert_eq!(
            (b.lower.to_string(), b.upper.to_string()),
            ("245/78".into(), "22/7".into())
        );
        assert_eq!(b.lower_expansion.expansion.to_string(), "[3;7,11,25,1,25,1,27,13]");
        assert_eq!(b.lower_expansion.decimal, parse_decimal("3.14103195").unwrap());
        assert_eq!(b.upper_expansion.decimal, parse_decimal("3.14271460").unwrap());
        let sides: Vec<Side> = b.lower_expansion.candidates.iter().map(|c| c.side).take(3).collect();
        assert_eq!(sides, [Side::Below, Side::Above, Side::Below]);
    }

    #[test]
    fn capped_selection_matches_enumeration() {
        // Oracle: i128 convergents of 3.14103195 and 3.14271460, filtered by
        // exact comparison against the printed eight-place perimeters.
        let c96 = r(314103195, 100000000);
        let big_c96 = r(314271460, 100000000);
        let pick_oracle = |conv: Vec<(i128, i128)>, cap: i128, below: bool| {
            conv.into_iter()
                .filter(|&(_, k)| k <= cap)
                .filter(|&(h, k)| {
                    let q = Rational::new(h as i64, k as i64).unwrap();
                    if below {
                        q < c96
                    } else {
                        q > big_c96
                    }
                })
                .max_by_key(|&(_, k)| k)
                .map(|(h, k)| r(h as i64, k as i64))
        };
        for cap in [1u64, 7, 75, 77, 78, 100, 1000, 1957] {
            let got = certified_rational_bounds(5, 8, cap);
            let lo = pick_oracle(oracle_convergents(314103195, 100000000), cap as i128, true);
            let hi = pick_oracle(oracle_convergents(314271460, 100000000), cap as i128, false);
            match (lo, hi) {
                (Some(lo), Some(hi)) => {
                    let b = got.unwrap();
                    assert_eq!((b.lower, b.upper), (lo, hi), "cap={cap}");
                }
                _ => assert!(matches!(got, Err(Error::NoValidBound { .. })), "cap={cap}"),
            }
        }
        let b = certified_rational_bounds(5, 8, 75).unwrap();
        assert_eq!((b.lower, b.upper), (r(3, 1), r(22, 7)));
    }

    #[test]
    fn no_valid_upper_bound_under_small_cap() {
        assert_eq!(
            certified_rational_bounds(5, 8, 6),
            Err(Error::NoValidBound {
                den_cap: 6,
                side: "above"
            })
        );
    }

    #[test]
    fn zu_chongzhi_bound() {
        let b = certified_rational_bounds(13, 8, 200).unwrap();
        assert_eq!(b.upper, r(355, 113));
        // oracle: convergents of 3.14159264 under 200 that lie below
        // c = 3.141592645034
        let c = r(3141592645034, 1000000000000);
        let lower = oracle_convergents(314159264, 100000000)
            .into_iter()
            .filter(|&(h, k)| k <= 200 && r(h as i64, k as i64) < c)
            .max_by_key(|&(_, k)| k)
            .unwrap();
        assert_eq!(lower, (333, 106));
        assert_eq!(b.lower, r(333, 106));
    }

    #[test]
    fn bounds_bracket_reference_value() {
        let pi = pi_reference();
        for (k, cap) in [(3, 10), (5, 100), (8, 1000), (10, 50_000), (13, 200)] {
            let b = certified_rational_bounds(k, 12, cap).unwrap();
            assert!(b.lower < pi && pi < b.upper, "k={k} cap={cap}");
        }
    }

    #[test]
    fn archimedes_chain() {
        let b = crate::polygon::bounds_at(5, 8).unwrap();
        assert_eq!(b.lower.side_of(&r(223, 71)), Side::Below);
        assert_eq!(b.lower.side_of(&r(245, 78)), Side::Below);
        assert_eq!(b.upper.side_of(&r(22, 7)), Side::Above);
        assert!(r(223, 71) < r(245, 78));
        assert!(b.lower.hi() < b.upper.lo());
    }

    fn positive_rational() -> impl Strategy<Value = Rational> {
        (1i64..i64::MAX / 4, 1i64..1_000_000_000).prop_map(|(n, d)| r(n, d))
    }

    proptest! {
        #[test]
        fn roundtrip(q in positive_rational()) {
            prop_assert_eq!(reconstruct(&expand(&q).unwrap()), q);
        }

        #[test]
        fn alternation_and_improvement(q in positive_rational()) {
            let convs = convergents(&expand(&q).unwrap());
            let last = convs.len() - 1;
            let mut prev_err: Option<Rational> = None;
            for c in &convs {
                if c.index < last {
                    if c.index % 2 == 0 { prop_assert!(c.value < q) } else { prop_assert!(c.value > q) }
                } else {
                    prop_assert_eq!(&c.value, &q);
                }
                let err = (&c.value - &q).abs();
                if let Some(p) = prev_err {
                    prop_assert!(err < p);
                }
                prev_err = Some(err);
            }
            for w in convs.windows(2).skip(1) {
                prop_assert!(w[0].value.den() < w[1].value.den());
            }
        }
    }
}
