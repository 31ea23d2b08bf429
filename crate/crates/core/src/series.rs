//! Truncations of five classical representations of π, for comparing their
//! convergence with the polygon bounds.
//!
//! Term counts:
//! - `leibniz`: number of summands of `4·(1 − 1/3 + 1/5 − …)`.
//! - `nilakantha`: number of summands of `4·(3/4 + 1/(2·3·4) − …)`, with
//!   the leading `3/4` as the first.
//! - `brouncker`: nesting depth below the leading 1 of
//!   `4/π = 1 + 1²/(2 + 3²/(2 + …))`; the deepest level is a bare 2.
//! - `wallis`: number of two-factor groups `(2j/(2j−1))·(2j/(2j+1))`.
//! - `viete`: number of radical factors `√2/2, √(2+√2)/2, …`.
//!
//! All but Viète are exact rationals.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::exactnum::{pi_reference, Interval, Rational};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum SeriesKind {
    Leibniz,
    Nilakantha,
    Brouncker,
    Wallis,
    Viete,
}

impl SeriesKind {
    pub const ALL: [SeriesKind; 5] = [
        SeriesKind::Leibniz,
        SeriesKind::Nilakantha,
        SeriesKind::Brouncker,
        SeriesKind::Wallis,
        SeriesKind::Viete,
    ];

    pub fn name(self) -> &'static str {
        match self {
            SeriesKind::Leibniz => "leibniz",
            SeriesKind::Nilakantha => "nilakantha",
            SeriesKind::Brouncker => "brouncker",
            SeriesKind::Wallis => "wallis",
            SeriesKind::Viete => "viete",
        }
    }

    fn min_terms(self) -> u32 {
        match self {
            SeriesKind::Leibniz | SeriesKind::Viete => 1,
            _ => 0,
        }
    }
}

impl fmt::Display for SeriesKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for SeriesKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        SeriesKind::ALL
            .into_iter()
            .find(|k| k.name() == s)
            .ok_or_else(|| Error::UnsupportedSeriesName(s.to_string()))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Estimate {
    Exact(Rational),
    Enclosure(Interval),
}

impl Estimate {
    fn minus(&self, q: &Rational) -> Estimate {
        match self {
            Estimate::Exact(v) => Estimate::Exact(v - q),
            Estimate::Enclosure(iv) => Estimate::Enclosure(iv.sub(&Interval::from_rational(q, iv.precision()))),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SeriesEstimate {
    pub series: SeriesKind,
    pub terms: u32,
    pub estimate: Estimate,
    /// `estimate − 3.141592653589`.
    pub error_vs_reference: Estimate,
}

fn ratio(n: i64, d: i64) -> Rational {
    Rational::new(n, d).expect("non-zero denominator")
}

fn leibniz(terms: u32) -> Rational {
    let sum = (0..i64::from(terms)).fold(Rational::zero(), |acc, i| {
        let t = ratio(1, 2 * i + 1);
        if i % 2 == 0 {
            acc + t
        } else {
            acc - t
        }
    });
    sum * Rational::from_integer(4)
}

fn nilakantha(terms: u32) -> Rational {
    let sum = (1..=i64::from(terms)).fold(Rational::zero(), |acc, j| {
        if j == 1 {
            return acc + ratio(3, 4);
        }
        let m = 2 * (j - 1);
        let t = ratio(1, m * (m + 1) * (m + 2));
        if j % 2 == 0 {
            acc + t
        } else {
            acc - t
        }
    });
    sum * Rational::from_integer(4)
}

fn brouncker(depth: u32) -> Rational {
    let depth = i64::from(depth);
    let four_over_pi = if depth == 0 {
        Rational::one()
    } else {
        let two = Rational::from_integer(2);
        let tail = (2..=depth).rev().fold(two.clone(), |t, j| {
            let odd = 2 * j - 1;
            &two + &(Rational::from_integer(odd * odd).checked_div(&t).unwrap())
        });
        Rational::one() + tail.recip().unwrap()
    };
    Rational::from_integer(4).checked_div(&four_over_pi).unwrap()
}

fn wallis(groups: u32) -> Rational {
    let product = (1..=i64::from(groups)).fold(Rational::one(), |acc, j| {
        let even = 2 * j;
        acc * ratio(even, even - 1) * ratio(even, even + 1)
    });
    product * Rational::from_integer(2)
}

fn viete(factors: u32, precision: u32) -> Result<Interval> {
    let two = Interval::from_integer(2, precision);
    let mut radical = two.sqrt()?;
    let mut product = radical.div(&two)?;
    for _ in 1..factors {
        radical = two.add(&radical).sqrt()?;
        product = product.mul(&radical.div(&two)?);
    }
    two.div(&product)
}

pub fn evaluate_series(series: SeriesKind, terms: u32, precision: u32) -> Result<SeriesEstimate> {
    if terms < series.min_terms() {
        return Err(Error::InvalidTermCount {
            series: series.name(),
            terms,
        });
    }
    let estimate = match series {
        SeriesKind::Leibniz => Estimate::Exact(leibniz(terms)),
        SeriesKind::Nilakantha => Estimate::Exact(nilakantha(terms)),
        SeriesKind::Brouncker => Estimate::Exact(brouncker(terms)),
        SeriesKind::Wallis => Estimate::Exact(wallis(terms)),
        SeriesKind::Viete => Estimate::Enclosure(viete(terms, precision)?),
    };
    let error_vs_reference = estimate.minus(&pi_reference());
    Ok(SeriesEstimate {
        series,
        terms,
        estimate,
        error_vs_reference,
    })
}

/// One row per series and term count `1..=max_terms`, in the order given.
pub fn convergence_report(series: &[SeriesKind], max_terms: u32, precision: u32) -> Result<Vec<SeriesEstimate>> {
    if max_terms < 1 {
        return Err(Error::InvalidTermCount {
            series: "report",
            terms: max_terms,
        });
    }
    series
        .iter()
        .flat_map(|&s| (1..=max_terms).map(move |n| evaluate_series(s, n, precision)))
        .collect()
}
