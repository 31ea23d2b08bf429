use std::fmt::Write;

use serde::Serialize;

use archipi::contfrac::{convergents, BoundExpansion, BoundSide, ContinuedFraction, RationalBounds};
use archipi::exactnum::{pi_reference, Interval, Rational, Rounding};
use archipi::polygon::{nested_radical_form, Perimeter, PolygonBounds};
use archipi::series::{Estimate, SeriesEstimate};
use archipi::Error;

use crate::Format;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Enclosure {
    pub lo: String,
    pub hi: String,
    /// Midpoint rounded to nearest.
    pub approx: String,
}

impl Enclosure {
    fn new(iv: &Interval, digits: u32) -> Self {
        Enclosure {
            lo: iv.lo_decimal(digits),
            hi: iv.hi_decimal(digits),
            approx: iv.approx_decimal(digits),
        }
    }

    fn text(&self) -> String {
        format!("{} in [{}, {}]", self.approx, self.lo, self.hi)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BoundsRow {
    pub n: u64,
    pub doublings: u32,
    pub c: Enclosure,
    #[serde(rename = "C")]
    pub big_c: Enclosure,
}

impl BoundsRow {
    fn new(b: &PolygonBounds, digits: u32) -> Self {
        BoundsRow {
            n: b.n,
            doublings: b.doublings,
            c: Enclosure::new(&b.lower, digits),
            big_c: Enclosure::new(&b.upper, digits),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TableRow {
    pub n: u64,
    pub doublings: u32,
    pub c_form: String,
    pub c: Enclosure,
    #[serde(rename = "C_form")]
    pub big_c_form: String,
    #[serde(rename = "C")]
    pub big_c: Enclosure,
}

#[derive(Serialize)]
struct Record<P: Serialize, R: Serialize> {
    command: &'static str,
    parameters: P,
    results: R,
}

#[derive(Serialize)]
struct PolygonParams {
    doublings: u32,
    digits: u32,
}

#[derive(Serialize)]
struct TableParams {
    max_doublings: u32,
    digits: u32,
}

fn json<P: Serialize, R: Serialize>(command: &'static str, parameters: P, results: R) -> String {
    let mut s = serde_json::to_string_pretty(&Record {
        command,
        parameters,
        results,
    })
    .expect("plain data");
    s.push('\n');
    s
}

pub(crate) fn bounds(b: &PolygonBounds, digits: u32, format: Format) -> String {
    let row = BoundsRow::new(b, digits);
    match format {
        Format::Text => format!(
            "n = {} (half-angle 180/{})\nc_n = {}\nC_n = {}\n",
            row.n,
            row.n,
            row.c.text(),
            row.big_c.text()
        ),
        Format::Csv => format!(
            "n,c_lo,c_hi,C_lo,C_hi\n{},{},{},{},{}\n",
            row.n, row.c.lo, row.c.hi, row.big_c.lo, row.big_c.hi
        ),
        Format::Json => json(
            "bounds",
            PolygonParams {
                doublings: b.doublings,
                digits,
            },
            row,
        ),
    }
}

pub(crate) fn table(rows: &[PolygonBounds], max_doublings: u32, digits: u32, format: Format) -> Result<String, Error> {
    let rows = rows
        .iter()
        .map(|b| {
            Ok(TableRow {
                n: b.n,
                doublings: b.doublings,
                c_form: nested_radical_form(b.n, Perimeter::Inscribed)?.to_string(),
                c: Enclosure::new(&b.lower, digits),
                big_c_form: nested_radical_form(b.n, Perimeter::Circumscribed)?.to_string(),
                big_c: Enclosure::new(&b.upper, digits),
            })
        })
        .collect::<Result<Vec<_>, Error>>()?;
    let mut out = String::new();
    match format {
        Format::Text => {
            for (i, r) in rows.iter().enumerate() {
                if i > 0 {
                    out.push('\n');
                }
                writeln!(out, "n = {}", r.n).unwrap();
                writeln!(out, "  c_n = {} = {}", r.c_form, r.c.text()).unwrap();
                writeln!(out, "  C_n = {} = {}", r.big_c_form, r.big_c.text()).unwrap();
            }
        }
        Format::Csv => {
            out.push_str("n,c_form,c_lo,c_hi,C_form,C_lo,C_hi\n");
            for r in &rows {
                writeln!(
                    out,
                    "{},{},{},{},{},{},{}",
                    r.n, r.c_form, r.c.lo, r.c.hi, r.big_c_form, r.big_c.lo, r.big_c.hi
                )
                .unwrap();
            }
        }
        Format::Json => out = json("table", TableParams { max_doublings, digits }, rows),
    }
    Ok(out)
}

fn convergent_list(cf: &ContinuedFraction) -> String {
    convergents(cf)
        .iter()
        .map(|c| c.value.to_string())
        .collect::<Vec<_>>()
        .join(", ")
}

pub(crate) fn expansion(input: &str, q: &Rational, cf: &ContinuedFraction) -> String {
    format!(
        "value = {input} = {q}\nexpansion = {cf}\nconvergents = {}\n",
        convergent_list(cf)
    )
}

fn perimeter_label(side: BoundSide, n: u64) -> String {
    match side {
        BoundSide::Lower => format!("c_{n}"),
        BoundSide::Upper => format!("C_{n}"),
    }
}

pub(crate) fn bound_expansion(b: &PolygonBounds, side: BoundSide, e: &BoundExpansion) -> String {
    let (enclosure, rounding, wanted) = match side {
        BoundSide::Lower => (&b.lower, "down", "below"),
        BoundSide::Upper => (&b.upper, "up", "above"),
    };
    let label = perimeter_label(side, b.n);
    let mut out = String::new();
    writeln!(
        out,
        "{label} in [{}, {}]",
        enclosure.lo_decimal(e.digits),
        enclosure.hi_decimal(e.digits)
    )
    .unwrap();
    writeln!(
        out,
        "value = {} (rounded {rounding} to {} digits) = {}",
        e.decimal.to_decimal(e.digits, Rounding::Floor),
        e.digits,
        e.decimal
    )
    .unwrap();
    writeln!(out, "expansion = {}", e.expansion).unwrap();
    writeln!(out, "convergents = {}", convergent_list(&e.expansion)).unwrap();
    let width = e
        .candidates
        .iter()
        .map(|c| c.convergent.value.to_string().len())
        .max()
        .unwrap_or(0);
    for c in &e.candidates {
        let mark = if c.side.as_str() == wanted { "  certified" } else { "" };
        let value = c.convergent.value.to_string();
        writeln!(
            out,
            "  {:>2}  {value:<width$}  {} {label}{mark}",
            c.convergent.index, c.side
        )
        .unwrap();
    }
    out
}

pub(crate) fn approx(r: &RationalBounds) -> String {
    let digits = r.lower_expansion.digits;
    let n = r.polygon.n;
    let mut out = format!("{} < pi < {}\n", r.lower, r.upper);
    writeln!(out, "n = {n}, {digits} digits, denominators <= {}", r.den_cap).unwrap();
    for (q, iv, side, label) in [
        (
            &r.lower,
            &r.polygon.lower,
            "below",
            perimeter_label(BoundSide::Lower, n),
        ),
        (
            &r.upper,
            &r.polygon.upper,
            "above",
            perimeter_label(BoundSide::Upper, n),
        ),
    ] {
        writeln!(
            out,
            "  {q} = {} is {side} {label} in [{}, {}]",
            q.to_decimal(digits, Rounding::Nearest),
            iv.lo_decimal(digits),
            iv.hi_decimal(digits)
        )
        .unwrap();
    }
    out
}

fn estimate_text(e: &Estimate, digits: u32) -> String {
    match e {
        Estimate::Exact(q) => format!("{} ({q})", q.to_decimal(digits, Rounding::Nearest)),
        Estimate::Enclosure(iv) => Enclosure::new(iv, digits).text(),
    }
}

fn error_text(e: &Estimate, digits: u32) -> String {
    match e {
        Estimate::Exact(q) => q.to_signed_decimal(digits, Rounding::Nearest),
        Estimate::Enclosure(iv) => iv.midpoint().to_signed_decimal(digits, Rounding::Nearest),
    }
}

pub(crate) fn series(rows: &[SeriesEstimate], digits: u32) -> String {
    let mut out = String::new();
    for r in rows {
        writeln!(
            out,
            "{:<10} {:>4}  {}  error {}",
            r.series.name(),
            r.terms,
            estimate_text(&r.estimate, digits),
            error_text(&r.error_vs_reference, digits)
        )
        .unwrap();
    }
    out
}

pub(crate) fn fig3(rows: &[PolygonBounds], digits: u32) -> String {
    let mut out = String::from("n,c_n,c_n_hi,C_n,C_n_hi\n");
    for b in rows {
        writeln!(
            out,
            "{},{},{},{},{}",
            b.n,
            b.lower.lo_decimal(digits),
            b.lower.hi_decimal(digits),
            b.upper.lo_decimal(digits),
            b.upper.hi_decimal(digits)
        )
        .unwrap();
    }
    let references = [
        ("22/7", Rational::new(22, 7).unwrap()),
        ("223/71", Rational::new(223, 71).unwrap()),
        ("245/78", Rational::new(245, 78).unwrap()),
        ("pi_ref", pi_reference()),
    ];
    for (label, q) in references {
        let (lo, hi) = (
            q.to_decimal(digits, Rounding::Floor),
            q.to_decimal(digits, Rounding::Ceil),
        );
        writeln!(out, "{label},{lo},{hi},{lo},{hi}").unwrap();
    }
    out
}
