//! Command-line front end for `archipi`.
//!
//! Every number printed comes from exact fixed-point endpoints; enclosures
//! are printed as `[lo, hi]` with the lower end rounded down and the upper
//! end rounded up.

mod render;

use std::fmt;

use clap::{Args, Parser, Subcommand, ValueEnum};

use archipi::contfrac::{expand, expand_bound, parse_decimal, rational_bounds_from, BoundSide};
use archipi::polygon::{bounds_at_capped, DEFAULT_MAX_PRECISION};
use archipi::series::{convergence_report, SeriesKind};
use archipi::Error;

pub use render::{BoundsRow, TableRow};

#[derive(Debug, Parser)]
#[command(
    name = "archipi",
    version,
    about = "Certified polygon bounds on pi and their rational approximants"
)]
pub struct Cli {
    /// Upper limit on working precision, in decimal digits
    #[arg(long, global = true, default_value_t = DEFAULT_MAX_PRECISION)]
    pub max_precision: u32,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Csv,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum BoundChoice {
    Lower,
    Upper,
}

#[derive(Debug, Args)]
pub struct Polygon {
    /// Number of doublings k; the polygon has n = 3·2^k sides
    #[arg(long, default_value_t = 5)]
    pub doublings: u32,
    /// Decimal digits required of each enclosure
    #[arg(long, default_value_t = 8)]
    pub digits: u32,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Enclosures of the inscribed and circumscribed perimeters for one n
    Bounds {
        #[command(flatten)]
        polygon: Polygon,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Closed forms and enclosures for n = 3, 6, 12, … up to 3·2^K
    Table {
        #[arg(long, default_value_t = 5)]
        max_doublings: u32,
        #[arg(long, default_value_t = 8)]
        digits: u32,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Continued-fraction expansion and convergents
    #[command(group(clap::ArgGroup::new("source").required(true).args(["value", "from_bound"])))]
    Cf {
        /// A positive decimal such as 3.14103195
        #[arg(long)]
        value: Option<String>,
        /// Expand the polygon's lower (c_n) or upper (C_n) enclosure end
        #[arg(long, value_enum)]
        from_bound: Option<BoundChoice>,
        #[command(flatten)]
        polygon: Polygon,
    },
    /// Certified rational bounds lower < pi < upper
    Approx {
        #[command(flatten)]
        polygon: Polygon,
        /// Largest denominator allowed in either bound
        #[arg(long, default_value_t = 100)]
        den_cap: u64,
    },
    /// Truncations of the classical series and products for pi
    Series {
        /// Comma-separated names (leibniz, nilakantha, brouncker, wallis, viete) or "all"
        #[arg(long, default_value = "all")]
        series: String,
        /// Report every term count from 1 to this value
        #[arg(long, default_value_t = 5)]
        terms: u32,
        #[arg(long, default_value_t = 8)]
        digits: u32,
    },
    /// CSV of perimeter enclosures against n plus reference constants
    ExportFig3 {
        #[arg(long, default_value_t = 5)]
        max_doublings: u32,
        #[arg(long, default_value_t = 8)]
        digits: u32,
    },
}

/// Failure with the process exit code it maps to.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CliError {
    pub code: i32,
    pub message: String,
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.message)
    }
}

impl std::error::Error for CliError {}

pub const EXIT_USAGE: i32 = 2;
pub const EXIT_PRECISION: i32 = 3;
pub const EXIT_NO_BOUND: i32 = 4;

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::NoValidBound { .. } => EXIT_NO_BOUND,
            Error::PrecisionExhausted(_)
            | Error::ResourceLimit { .. }
            | Error::NegativeRadicand
            | Error::DivisionByZeroInterval => EXIT_PRECISION,
            _ => EXIT_USAGE,
        };
        CliError {
            code,
            message: e.to_string(),
        }
    }
}

fn parse_series_list(list: &str) -> Result<Vec<SeriesKind>, Error> {
    if list == "all" {
        return Ok(SeriesKind::ALL.to_vec());
    }
    list.split(',').filter(|s| !s.is_empty()).map(str::parse).collect()
}

/// Runs one command and returns everything it prints to stdout.
pub fn run(cli: &Cli) -> Result<String, CliError> {
    let cap = cli.max_precision;
    let out = match &cli.command {
        Command::Bounds { polygon, format } => {
            let b = bounds_at_capped(polygon.doublings, polygon.digits, cap)?;
            render::bounds(&b, polygon.digits, *format)
        }
        Command::Table {
            max_doublings,
            digits,
            format,
        } => {
            let rows = (0..=*max_doublings)
                .map(|k| bounds_at_capped(k, *digits, cap))
                .collect::<Result<Vec<_>, _>>()?;
            render::table(&rows, *max_doublings, *digits, *format)?
        }
        Command::Cf { value: Some(s), .. } => {
            let q = parse_decimal(s)?;
            render::expansion(s, &q, &expand(&q)?)
        }
        Command::Cf {
            from_bound: Some(which),
            polygon,
            ..
        } => {
            let b = bounds_at_capped(polygon.doublings, polygon.digits, cap)?;
            let side = match which {
                BoundChoice::Lower => BoundSide::Lower,
                BoundChoice::Upper => BoundSide::Upper,
            };
            render::bound_expansion(&b, side, &expand_bound(&b, side, polygon.digits))
        }
        Command::Cf { .. } => unreachable!("clap requires one input source"),
        Command::Approx { polygon, den_cap } => {
            let b = bounds_at_capped(polygon.doublings, polygon.digits, cap)?;
            render::approx(&rational_bounds_from(b, polygon.digits, *den_cap)?)
        }
        Command::Series { series, terms, digits } => {
            let kinds = parse_series_list(series)?;
            let working = digits.saturating_add(10);
            if working > cap {
                return Err(Error::ResourceLimit {
                    needed: u64::from(working),
                    limit: cap,
                }
                .into());
            }
            render::series(&convergence_report(&kinds, *terms, working)?, *digits)
        }
        Command::ExportFig3 { max_doublings, digits } => {
            let rows = (0..=*max_doublings)
                .map(|k| bounds_at_capped(k, *digits, cap))
                .collect::<Result<Vec<_>, _>>()?;
            render::fig3(&rows, *digits)
        }
    };
    Ok(out)
}

/// Parses `args` (including the program name) and runs the command.
pub fn run_args<I, T>(args: I) -> Result<String, CliError>
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = Cli::try_parse_from(args).map_err(|e| CliError {
        code: e.exit_code(),
        message: e.to_string(),
    })?;
    run(&cli)
}
