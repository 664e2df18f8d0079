//! The `repseries` command line.
//!
//! ```text
//! repseries <command> --group SPEC [--n N] [--k K] [--trunc M] [--q Q]
//!           [--format text|latex|json] [--bigraded]
//! ```
//!
//! Documents go to `out`, diagnostics to `err`. Exit codes: 0 on success,
//! 1 when a computation is refused (enumeration cap, truncation window) or a
//! `check` comparison fails, 2 on usage and parse errors.

mod format;

pub use format::{latex_value, Document, OutputFormat};

use std::ffi::OsString;
use std::io::Write;

use clap::{CommandFactory, Parser, ValueEnum};

use crate::error::Error;
use crate::oracle::cross_check;
use crate::series::{
    comm_hilbert_series, comm_series, euler_characteristic, hom_series, rep_hilbert_series,
    rep_series, smash_series, xq_hilbert_series, xq_series, FormulaId, SeriesResult, SeriesValue,
    DEFAULT_COMM_ORDER,
};
use crate::weylcore::{class_table, degrees, enum_cap_from_env, parse_group, GroupSpec};

const GRAMMAR: &str = "\
Group specs are products of factors separated by 'x' (or '*'):
  SU(k) U(k) SO(k) Spin(k) Sp(k) PSU(k) PU(k)
  A_k B_k C_k D_k G2 F4 E6 E7 E8 T^k (T alone means T^1)
  1 (the trivial group)
Names are case-insensitive and whitespace is ignored, e.g. \"SU(2)xT^1\", \"G2 x U(3)\".

Exceptional Weyl groups are enumerated; the element cap defaults to 5000000
and can be changed with the WEYL_ENUM_CAP environment variable.";

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Command {
    /// Poincaré series of Rep(Z^n, G)_1 in s (needs --n)
    Rep,
    /// Bigraded series of Rep(Z^n, G)_1 in s and t (needs --n)
    Hilbert,
    /// Series of the k-fold smash power of the torus modulo W (needs --k)
    Smash,
    /// Series of Comm(G)_1/G to order --trunc
    Comm,
    /// Series of X(q, G)_1/G for --q >= 2 to order --trunc
    Xq,
    /// Poincaré series of Hom(Z^n, G)_1 in q (needs --n >= 1)
    Hom,
    /// Euler characteristic of Rep(Z^n, G)_1 (needs --n)
    Euler,
    /// Characteristic-polynomial class table of W
    Classes,
    /// Fundamental degrees of W
    Degrees,
    /// Cross-check fast paths against brute force for n <= --n, k <= --k
    Check,
}

#[derive(Debug, Parser)]
#[command(name = "repseries", version, about = "Exact Poincaré series of representation spaces", after_help = GRAMMAR)]
struct Cli {
    #[arg(value_enum)]
    command: Command,
    /// Compact connected Lie group, e.g. "U(3)" or "SU(2)xG2"
    #[arg(long, short)]
    group: String,
    /// Rank of the free abelian (or H_1 of the nilpotent) group
    #[arg(long, short)]
    n: Option<u32>,
    /// Smash power
    #[arg(long, short)]
    k: Option<u32>,
    /// Truncation order in s for comm and xq
    #[arg(long, default_value_t = DEFAULT_COMM_ORDER)]
    trunc: usize,
    /// Nilpotency parameter for xq
    #[arg(long, default_value_t = 2)]
    q: u32,
    #[arg(long, value_enum, default_value_t = OutputFormat::Text)]
    format: OutputFormat,
    /// Print the bigraded (s, t) series for rep, comm and xq
    #[arg(long)]
    bigraded: bool,
}

enum Failure {
    Usage(String),
    Compute(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Parse(_) | Error::InvalidArgument(_) => Failure::Usage(e.to_string()),
            other => Failure::Compute(other),
        }
    }
}

fn required(value: Option<u32>, flag: &str, command: Command) -> Result<u32, Failure> {
    value.ok_or_else(|| {
        let name = command
            .to_possible_value()
            .map(|v| v.get_name().to_string())
            .unwrap_or_default();
        Failure::Usage(format!("{name} requires {flag}"))
    })
}

fn series(formula: FormulaId, g: &GroupSpec, parameter: u32, value: SeriesValue) -> Document {
    Document::Series(SeriesResult::new(
        formula,
        g.clone(),
        u64::from(parameter),
        value,
    ))
}

fn execute(cli: &Cli) -> Result<(Document, bool), Failure> {
    let cap = enum_cap_from_env()?;
    let g =
        parse_group(&cli.group).map_err(|e| Failure::Usage(format!("{e} in {:?}", cli.group)))?;
    let trunc =
        u32::try_from(cli.trunc).map_err(|_| Failure::Usage("--trunc is too large".into()))?;
    let doc = match cli.command {
        Command::Rep => {
            let n = required(cli.n, "--n", cli.command)?;
            let table = class_table(&g, cap)?;
            if cli.bigraded {
                series(
                    FormulaId::RepHilbert,
                    &g,
                    n,
                    SeriesValue::BiPoly(rep_hilbert_series(&table, n)),
                )
            } else {
                series(
                    FormulaId::Rep,
                    &g,
                    n,
                    SeriesValue::Poly(rep_series(&table, n)),
                )
            }
        }
        Command::Hilbert => {
            let n = required(cli.n, "--n", cli.command)?;
            let table = class_table(&g, cap)?;
            series(
                FormulaId::RepHilbert,
                &g,
                n,
                SeriesValue::BiPoly(rep_hilbert_series(&table, n)),
            )
        }
        Command::Smash => {
            let k = required(cli.k, "--k", cli.command)?;
            let table = class_table(&g, cap)?;
            series(
                FormulaId::Smash,
                &g,
                k,
                SeriesValue::Poly(smash_series(&table, k)),
            )
        }
        Command::Comm => {
            let table = class_table(&g, cap)?;
            if cli.bigraded {
                let v = comm_hilbert_series(&table, cli.trunc)?;
                series(FormulaId::CommHilbert, &g, trunc, SeriesValue::BiSeries(v))
            } else {
                series(
                    FormulaId::Comm,
                    &g,
                    trunc,
                    SeriesValue::Series(comm_series(&table, cli.trunc)?),
                )
            }
        }
        Command::Xq => {
            let table = class_table(&g, cap)?;
            let value = if cli.bigraded {
                SeriesValue::BiSeries(xq_hilbert_series(&table, cli.q, cli.trunc)?)
            } else {
                SeriesValue::Series(xq_series(&table, cli.q, cli.trunc)?)
            };
            series(FormulaId::Xq, &g, trunc, value)
        }
        Command::Hom => {
            let n = required(cli.n, "--n", cli.command)?;
            if n == 0 {
                return Err(Failure::Usage("hom requires --n >= 1".into()));
            }
            let table = class_table(&g, cap)?;
            series(
                FormulaId::Hom,
                &g,
                n,
                SeriesValue::Poly(hom_series(&table, &degrees(&g), n)?),
            )
        }
        Command::Euler => {
            let n = required(cli.n, "--n", cli.command)?;
            let table = class_table(&g, cap)?;
            series(
                FormulaId::Euler,
                &g,
                n,
                SeriesValue::Scalar(euler_characteristic(&table, n)),
            )
        }
        Command::Classes => Document::Classes(class_table(&g, cap)?),
        Command::Degrees => Document::Degrees(degrees(&g)),
        Command::Check => {
            let report = cross_check(&g, cli.n.unwrap_or(3), cli.k.unwrap_or(3), cap)?;
            let ok = report.all_passed();
            return Ok((Document::Check(report), ok));
        }
    };
    Ok((doc, true))
}

/// Runs the command line `args` (program name first) and returns the exit
/// code.
pub fn run<I, T>(args: I, out: &mut impl Write, err: &mut impl Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            let _ = if code == 0 {
                out.write_all(text.as_bytes())
            } else {
                err.write_all(text.as_bytes())
            };
            return code;
        }
    };
    match execute(&cli) {
        Ok((doc, ok)) => match doc.render(cli.format) {
            Some(text) => {
                let _ = out.write_all(text.as_bytes());
                if ok {
                    0
                } else {
                    let _ = writeln!(err, "error: some checks failed");
                    1
                }
            }
            None => {
                let _ = writeln!(err, "error: check output is available as text or json only");
                2
            }
        },
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            let _ = writeln!(err, "{}", Cli::command().render_usage());
            2
        }
        Err(Failure::Compute(e)) => {
            let _ = writeln!(err, "error: {e}");
            1
        }
    }
}
