//! Closed forms `n·√(2 − √(2 + … √3))/…` for the polygon perimeters.
//!
//! For `n = 3·2^k` with `k ≥ 2`, writing `R₀ = √3` and `R_j = √(2 + R_{j−1})`:
//!
//! ```text
//! c_n = n·√(2 − R_{k−2})/2
//! C_n = n·√(2 − R_{k−2})/√(2 + R_{k−2})
//! ```
//!
//! The triangle and hexagon have their own short forms.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;

use super::doublings_for;
use crate::error::{Error, Result};
use crate::exactnum::Interval;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum RadicalSign {
    Plus,
    Minus,
}

/// `√3`, or `√(2 ± inner)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Radical {
    Sqrt3,
    Nested { sign: RadicalSign, inner: Box<Radical> },
}

impl Radical {
    /// `R_j`: `j` layers of `√(2 + …)` around `√3`.
    pub fn tower(depth: u32) -> Radical {
        (0..depth).fold(Radical::Sqrt3, |r, _| Radical::nest(RadicalSign::Plus, r))
    }

    pub fn nest(sign: RadicalSign, inner: Radical) -> Radical {
        Radical::Nested {
            sign,
            inner: Box::new(inner),
        }
    }

    /// Number of square-root signs.
    pub fn depth(&self) -> u32 {
        match self {
            Radical::Sqrt3 => 1,
            Radical::Nested { inner, .. } => 1 + inner.depth(),
        }
    }

    pub fn eval(&self, precision: u32) -> Result<Interval> {
        match self {
            Radical::Sqrt3 => Interval::from_integer(3, precision).sqrt(),
            Radical::Nested { sign, inner } => {
                let two = Interval::from_integer(2, precision);
                let inner = inner.eval(precision)?;
                match sign {
                    RadicalSign::Plus => two.add(&inner),
                    RadicalSign::Minus => two.sub(&inner),
                }
                .sqrt()
            }
        }
    }
}

impl fmt::Display for Radical {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Radical::Sqrt3 => f.write_str("√3"),
            Radical::Nested { sign, inner } => {
                let op = match sign {
                    RadicalSign::Plus => '+',
                    RadicalSign::Minus => '−',
                };
                write!(f, "√(2{op}{inner})")
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Factor {
    One,
    Two,
    Root(Radical),
}

impl Factor {
    fn eval(&self, precision: u32) -> Result<Interval> {
        match self {
            Factor::One => Ok(Interval::from_integer(1, precision)),
            Factor::Two => Ok(Interval::from_integer(2, precision)),
            Factor::Root(r) => r.eval(precision),
        }
    }
}

/// Which perimeter a closed form describes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Perimeter {
    /// `c_n`, the inscribed polygon.
    Inscribed,
    /// `C_n`, the circumscribed polygon.
    Circumscribed,
}

/// `multiplier · numerator / denominator`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RadicalExpr {
    pub multiplier: u64,
    pub numerator: Factor,
    pub denominator: Factor,
}

impl fmt::Display for RadicalExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.multiplier)?;
        match &self.numerator {
            Factor::One => {}
            Factor::Two => f.write_str("·2")?,
            Factor::Root(Radical::Sqrt3) => f.write_str("√3")?,
            Factor::Root(r) => write!(f, "·{r}")?,
        }
        match &self.denominator {
            Factor::One => Ok(()),
            Factor::Two => f.write_str("/2"),
            Factor::Root(r) => write!(f, "/{r}"),
        }
    }
}

struct Parser<'a> {
    rest: &'a str,
}

impl<'a> Parser<'a> {
    fn eat(&mut self, token: &str) -> bool {
        match self.rest.strip_prefix(token) {
            Some(rest) => {
                self.rest = rest;
                true
            }
            None => false,
        }
    }

    fn radical(&mut self) -> Option<Radical> {
        if self.eat("√3") {
            return Some(Radical::Sqrt3);
        }
        if !self.eat("√(2") {
            return None;
        }
        let sign = if self.eat("+") {
            RadicalSign::Plus
        } else if self.eat("−") {
            RadicalSign::Minus
        } else {
            return None;
        };
        let inner = self.radical()?;
        self.eat(")").then(|| Radical::nest(sign, inner))
    }

    fn factor(&mut self) -> Option<Factor> {
        if self.eat("2") {
            Some(Factor::Two)
        } else {
            self.radical().map(Factor::Root)
        }
    }

    fn expr(&mut self) -> Option<RadicalExpr> {
        let digits = self.rest.bytes().take_while(u8::is_ascii_digit).count();
        let multiplier = self.rest[..digits].parse().ok()?;
        self.rest = &self.rest[digits..];
        let numerator = if self.rest.starts_with('√') {
            Factor::Root(self.radical()?)
        } else if self.eat("·") {
            self.factor()?
        } else {
            Factor::One
        };
        let denominator = if self.eat("/") { self.factor()? } else { Factor::One };
        self.rest.is_empty().then_some(RadicalExpr {
            multiplier,
            numerator,
            denominator,
        })
    }
}

impl FromStr for RadicalExpr {
    type Err = Error;

    /// Accepts exactly the strings produced by `Display`.
    fn from_str(s: &str) -> Result<Self> {
        Parser { rest: s }
            .expr()
            .filter(|e| e.to_string() == s)
            .ok_or_else(|| Error::MalformedRadical(s.to_string()))
    }
}

/// Closed form of `c_n` or `C_n`.
pub fn nested_radical_form(n: u64, which: Perimeter) -> Result<RadicalExpr> {
    let k = doublings_for(n).ok_or(Error::UnsupportedSideCount(n))?;
    let sqrt3 = || Factor::Root(Radical::Sqrt3);
    let expr = |multiplier, numerator, denominator| RadicalExpr {
        multiplier,
        numerator,
        denominator,
    };
    Ok(match (k, which) {
        (0, Perimeter::Inscribed) => expr(3, sqrt3(), Factor::Two),
        (0, Perimeter::Circumscribed) => expr(3, sqrt3(), Factor::One),
        (1, Perimeter::Inscribed) => expr(3, Factor::One, Factor::One),
        (1, Perimeter::Circumscribed) => expr(2, sqrt3(), Factor::One),
        (k, which) => {
            let base = Radical::tower(k - 2);
            let numerator = Factor::Root(Radical::nest(RadicalSign::Minus, base.clone()));
            let denominator = match which {
                Perimeter::Inscribed => Factor::Two,
                Perimeter::Circumscribed => Factor::Root(Radical::nest(RadicalSign::Plus, base)),
            };
            expr(n, numerator, denominator)
        }
    })
}

/// Certified enclosure of a closed form at `precision` digits.
pub fn eval_radical(expr: &RadicalExpr, precision: u32) -> Result<Interval> {
    let num = expr.numerator.eval(precision)?.mul_int(&BigInt::from(expr.multiplier));
    num.div(&expr.denominator.eval(precision)?)
}
