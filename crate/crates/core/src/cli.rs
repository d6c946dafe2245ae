//! Command-line front end. [`run`] parses arguments and returns the exit code
//! together with everything destined for stdout and stderr, so it can be
//! exercised without spawning a process.

use std::path::PathBuf;

use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::cyclo::{tildec, tildec_det, tildec_series, tildec_t2one, ATable, CoeffTable, Route};
use crate::error::{Error, Result};
use crate::exactalg::render::{poly_json, poly_latex, poly_text};
use crate::exactalg::{LaurentPoly, TruncatedSeries, Var};
use crate::knots::{classical_jones, generalized_jones, KnotRecord};
use crate::params::{HeckeParams, Param};
use crate::qcombo::cyclotomic_c;
use crate::verify::run_suite;

#[derive(Parser, Debug)]
#[command(
    name = "genjones",
    version,
    about = "Generalized colored Jones polynomials and their cyclotomic coefficients"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// One coefficient ĉ_{n,i-1}, or the series Σ_n ĉ_{n,i-1} λ^n up to --order.
    Coeff(CoeffArgs),
    /// J_n of a knot.
    Jones(JonesArgs),
    /// Run a named verification suite.
    Verify(VerifyArgs),
    /// All coefficients with 1 <= i <= n <= N.
    Table(TableArgs),
}

#[derive(Args, Debug, Clone)]
pub struct CommonArgs {
    /// Use the classical coefficients (t1 = t2 = 1).
    #[arg(long, conflicts_with_all = ["t1", "t2"])]
    pub classic: bool,
    #[arg(long, default_value = "sum")]
    pub route: Route,
    /// `1` or a formal marker (`t`, `t1`, `formal`).
    #[arg(long, default_value = "formal")]
    pub t1: Param,
    /// `1` or a formal marker (`t`, `t2`, `formal`).
    #[arg(long, default_value = "formal")]
    pub t2: Param,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
}

impl CommonArgs {
    fn params(&self) -> HeckeParams {
        if self.classic {
            HeckeParams::classical()
        } else {
            HeckeParams::new(self.t1, self.t2)
        }
    }
}

#[derive(Args, Debug)]
pub struct CoeffArgs {
    #[arg(short = 'n')]
    pub n: Option<usize>,
    #[arg(short = 'i')]
    pub i: usize,
    /// Truncation order of the generating series (used when -n is absent).
    #[arg(long)]
    pub order: Option<usize>,
    #[command(flatten)]
    pub common: CommonArgs,
}

#[derive(Args, Debug)]
pub struct JonesArgs {
    #[arg(short = 'n')]
    pub n: usize,
    /// Built-in knot: unknot (0_1) or figure-eight (4_1).
    #[arg(
        long,
        conflicts_with = "knot_file",
        required_unless_present = "knot_file"
    )]
    pub knot: Option<String>,
    /// JSON knot record.
    #[arg(long)]
    pub knot_file: Option<PathBuf>,
    #[command(flatten)]
    pub common: CommonArgs,
}

#[derive(Args, Debug)]
pub struct VerifyArgs {
    #[arg(long, default_value = "all")]
    pub suite: String,
    /// Override the size bound of every selected check.
    #[arg(long)]
    pub nmax: Option<usize>,
}

#[derive(Args, Debug)]
pub struct TableArgs {
    /// Largest n.
    #[arg(short = 'n')]
    pub n: usize,
    #[command(flatten)]
    pub common: CommonArgs,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Latex,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

/// Parse `args` (including the program name) and execute the command.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => Outcome {
                    code: 0,
                    stdout: e.to_string(),
                    stderr: String::new(),
                },
                _ => Outcome {
                    code: 1,
                    stdout: String::new(),
                    stderr: format!("{}\n", first_line(&e.to_string())),
                },
            };
        }
    };
    match execute(&cli.command) {
        Ok(stdout) => Outcome {
            code: 0,
            stdout,
            stderr: String::new(),
        },
        Err(e) => Outcome {
            code: if e.is_internal() { 2 } else { 1 },
            stdout: String::new(),
            stderr: format!("error: {}\n", first_line(&e.to_string())),
        },
    }
}

fn first_line(s: &str) -> &str {
    s.lines()
        .find(|l| !l.trim().is_empty())
        .unwrap_or("")
        .trim_end()
}

fn execute(cmd: &Command) -> Result<String> {
    match cmd {
        Command::Coeff(a) => coeff(a),
        Command::Jones(a) => jones(a),
        Command::Verify(a) => verify(a),
        Command::Table(a) => table(a),
    }
}

fn render(p: &LaurentPoly, format: Format) -> String {
    match format {
        Format::Text => poly_text(p),
        Format::Json => poly_json(p).to_string(),
        Format::Latex => poly_latex(p),
    }
}

fn coeff(a: &CoeffArgs) -> Result<String> {
    let c = &a.common;
    let params = c.params();
    if a.i == 0 {
        return Err(Error::Validation("-i must be at least 1".into()));
    }
    let value = match (a.n, a.order) {
        (Some(0), _) => return Err(Error::Validation("-n must be at least 1".into())),
        (Some(n), _) if c.classic => cyclotomic_c(n as i32, a.i as i32)?,
        (Some(n), _) => tildec(n, a.i, &params, c.route)?,
        (None, Some(order)) => lambda_series(a.i, order, &params, c.route, c.classic)?,
        (None, None) => return Err(Error::Validation("coeff needs -n or --order".into())),
    };
    Ok(format!("{}\n", render(&value, c.format)))
}

/// `Σ_{n <= order} ĉ_{n,i-1} λ^n` as a polynomial in `λ`.
fn lambda_series(
    i: usize,
    order: usize,
    params: &HeckeParams,
    route: Route,
    classic: bool,
) -> Result<LaurentPoly> {
    let lam = |n: usize| LaurentPoly::var_pow(Var::Lambda, n as i32);
    if classic {
        return (i..=order)
            .map(|n| Ok(&cyclotomic_c(n as i32, i as i32)? * &lam(n)))
            .sum();
    }
    let from_series = |s: TruncatedSeries| -> Result<LaurentPoly> {
        (1..=order)
            .map(|n| {
                let c = s.coeff(n).to_poly().ok_or_else(|| {
                    Error::IntegralityViolation(format!(
                        "series coefficient (n={n}, i={i}) is not integral"
                    ))
                })?;
                Ok(&c * &lam(n))
            })
            .sum()
    };
    match route {
        Route::Series => from_series(tildec_series(i, order, params)?),
        Route::Det => from_series(tildec_det(i, order, params)?),
        Route::Sum => {
            if order == 0 {
                return Ok(LaurentPoly::zero());
            }
            let table = ATable::build(order, params);
            (i..=order)
                .map(|n| Ok(&table.tildec_sum(n, i)? * &lam(n)))
                .sum()
        }
        Route::Macdonald => (i..=order)
            .map(|n| Ok(&tildec_t2one(n, i, params)? * &lam(n)))
            .sum(),
    }
}

fn jones(a: &JonesArgs) -> Result<String> {
    let knot = match (&a.knot, &a.knot_file) {
        (Some(name), _) => KnotRecord::builtin(name)?,
        (None, Some(path)) => KnotRecord::load(path)?,
        (None, None) => return Err(Error::Validation("need --knot or --knot-file".into())),
    };
    let c = &a.common;
    let value = if c.classic {
        classical_jones(&knot, a.n)?
    } else {
        generalized_jones(&knot, a.n, &c.params(), c.route)?
    };
    Ok(format!("{}\n", render(&value, c.format)))
}

fn verify(a: &VerifyArgs) -> Result<String> {
    let passed = run_suite(&a.suite, a.nmax)?;
    let mut out: String = passed.iter().map(|id| format!("ok {id}\n")).collect();
    out.push_str(&format!("{} checks passed\n", passed.len()));
    Ok(out)
}

fn table(a: &TableArgs) -> Result<String> {
    let c = &a.common;
    let t = CoeffTable::build(a.n, &c.params(), c.route)?;
    let entry = |n: usize, i: usize| {
        if c.classic {
            t.classical(n, i)
        } else {
            t.generalized(n, i)
        }
    };
    let cells = (1..=a.n).flat_map(|n| (1..=n).map(move |i| (n, i)));
    let out = match c.format {
        Format::Text => cells
            .map(|(n, i)| format!("{n} {i}: {}\n", poly_text(entry(n, i))))
            .collect(),
        Format::Latex => {
            let name = if c.classic { "c" } else { "\\hat{c}" };
            cells
                .map(|(n, i)| format!("{name}_{{{n},{}}} = {}\n", i - 1, poly_latex(entry(n, i))))
                .collect()
        }
        Format::Json => {
            let rows: Vec<Value> = cells
                .map(|(n, i)| json!({"n": n, "i": i, "value": poly_json(entry(n, i))}))
                .collect();
            format!("{}\n", Value::Array(rows))
        }
    };
    Ok(out)
}
