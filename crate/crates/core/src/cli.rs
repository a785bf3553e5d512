//! Command-line front end. Exit codes: 0 success, 1 a check failed or a
//! computation could not complete, 2 invalid usage.

use std::io::{self, Write};

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::closed_forms::{ClosedForms, Fault};
use crate::constant_chain::{self, combined_integrand};
use crate::em_factorial::{self, MAX_TABLE_N};
use crate::error::Error;
use crate::format::sig17;
use crate::suite::{self, SuiteConfig, VerificationSuiteReport};

pub const EXIT_PASS: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

const MAX_SAMPLES: usize = 10_000_000;

#[derive(Debug, Parser)]
#[command(
    name = "stirling-lab",
    version,
    about = "Numerical checks of Stirling's formula"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Run the full identity verification suite
    Verify(VerifyArgs),
    /// Approximate ln √(2π) − 1 by one route
    Constant(ConstantArgs),
    /// Emit the Stirling ratio convergence table
    Ratio(RatioArgs),
    /// Sample the combined integrand on [0, 1/2] as CSV
    Integrand(IntegrandArgs),
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[arg(long, default_value_t = suite::DEFAULT_TOLERANCE)]
    pub tol: f64,
    /// Print a JSON document instead of a table
    #[arg(long)]
    pub json: bool,
    #[arg(long, default_value_t = suite::DEFAULT_SERIES_N)]
    pub series_n: u64,
    #[arg(long, default_value_t = suite::DEFAULT_SAWTOOTH_T)]
    pub sawtooth_t: u64,
    /// Replace one closed form by a wrong variant (mutation testing)
    #[arg(long, value_enum, hide = true)]
    pub inject_fault: Option<Fault>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Method {
    Series,
    Sawtooth,
    Quadrature,
}

#[derive(Debug, Args)]
pub struct ConstantArgs {
    #[arg(long, value_enum)]
    pub method: Method,
    /// Truncation level (series: default 100000; sawtooth: default 10000)
    #[arg(long)]
    pub n: Option<u64>,
    /// Quadrature tolerance
    #[arg(long, default_value_t = 1e-10)]
    pub tol: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Csv,
    Json,
}

#[derive(Debug, Args)]
pub struct RatioArgs {
    #[arg(long)]
    pub max_n: u64,
    #[arg(long, value_enum, default_value_t = Format::Csv)]
    pub format: Format,
}

#[derive(Debug, Args)]
pub struct IntegrandArgs {
    #[arg(long, default_value_t = 512)]
    pub samples: usize,
}

enum Failure {
    Usage(String),
    Compute(Error),
    Io(io::Error),
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Io(e)
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Compute(e)
    }
}

/// Executes `cli`, writing results to `out` and diagnostics to `err`, and
/// returns the process exit code.
pub fn run(cli: Cli, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let outcome = match cli.command {
        Command::Verify(args) => cmd_verify(&args, out),
        Command::Constant(args) => cmd_constant(&args, out).map(|()| EXIT_PASS),
        Command::Ratio(args) => cmd_ratio(&args, out).map(|()| EXIT_PASS),
        Command::Integrand(args) => cmd_integrand(&args, out).map(|()| EXIT_PASS),
    };
    match outcome {
        Ok(code) => code,
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_USAGE
        }
        Err(Failure::Compute(e)) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_FAIL
        }
        Err(Failure::Io(e)) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_FAIL
        }
    }
}

fn cmd_verify(args: &VerifyArgs, out: &mut dyn Write) -> Result<i32, Failure> {
    let config = SuiteConfig {
        tol: args.tol,
        series_n: args.series_n,
        sawtooth_t: args.sawtooth_t,
    };
    config
        .validate()
        .map_err(|e| Failure::Usage(e.to_string()))?;
    let forms = args
        .inject_fault
        .map_or(ClosedForms::STANDARD, ClosedForms::with_fault);
    let report = suite::run_with(&config, &forms)?;
    if args.json {
        serde_json::to_writer_pretty(&mut *out, &report).map_err(io::Error::from)?;
        writeln!(out)?;
    } else {
        write_table(&report, out)?;
    }
    Ok(if report.overall_pass {
        EXIT_PASS
    } else {
        EXIT_FAIL
    })
}

fn write_table(report: &VerificationSuiteReport, out: &mut dyn Write) -> io::Result<()> {
    let width = report
        .reports
        .iter()
        .map(|r| r.name.len())
        .max()
        .unwrap_or(5)
        .max(5);
    writeln!(
        out,
        "{:<width$}  {:>24}  {:>24}  {:>10}  {:>10}  result",
        "check", "lhs", "rhs", "|diff|", "tol"
    )?;
    for r in &report.reports {
        writeln!(
            out,
            "{:<width$}  {:>24}  {:>24}  {:>10.3e}  {:>10.3e}  {}",
            r.name,
            sig17(r.lhs),
            sig17(r.rhs),
            r.abs_diff,
            r.tolerance,
            if r.pass { "pass" } else { "FAIL" }
        )?;
    }
    let failed = report.failures().count();
    writeln!(
        out,
        "overall: {} ({} of {} checks passed)",
        if report.overall_pass { "pass" } else { "FAIL" },
        report.reports.len() - failed,
        report.reports.len()
    )
}

fn cmd_constant(args: &ConstantArgs, out: &mut dyn Write) -> Result<(), Failure> {
    let closed = constant_chain::stirling_constant_closed();
    match args.method {
        Method::Series | Method::Sawtooth => {
            let default_n = if args.method == Method::Series {
                suite::DEFAULT_SERIES_N
            } else {
                suite::DEFAULT_SAWTOOTH_T
            };
            let n = args.n.unwrap_or(default_n);
            if n < 2 {
                return Err(Failure::Usage(format!("--n must be at least 2, got {n}")));
            }
            let partial = if args.method == Method::Series {
                constant_chain::constant_series_partial(n)
            } else {
                em_factorial::sawtooth_integral(n)
            }
            .map_err(|e| match e {
                Error::Budget { .. } => Failure::Usage(e.to_string()),
                other => Failure::Compute(other),
            })?;
            let tail = constant_chain::constant_series_tail_bracket(n)?;
            let estimate = partial + tail.midpoint();
            let method = if args.method == Method::Series {
                "series"
            } else {
                "sawtooth"
            };
            writeln!(out, "method: {method}")?;
            writeln!(out, "n: {n}")?;
            writeln!(out, "partial: {}", sig17(partial))?;
            writeln!(
                out,
                "tail_bracket: [{}, {}]",
                sig17(tail.lower()),
                sig17(tail.upper())
            )?;
            writeln!(out, "approximation: {}", sig17(estimate))?;
            writeln!(out, "closed_form: {}", sig17(closed))?;
            writeln!(
                out,
                "abs_error_partial: {}",
                sig17((partial - closed).abs())
            )?;
            writeln!(out, "abs_error: {}", sig17((estimate - closed).abs()))?;
        }
        Method::Quadrature => {
            let q = constant_chain::constant_via_quadrature(args.tol).map_err(|e| match e {
                Error::InvalidTolerance(_) | Error::ToleranceTooSmall { .. } => {
                    Failure::Usage(e.to_string())
                }
                other => Failure::Compute(other),
            })?;
            let q = q.require_converged(args.tol)?;
            writeln!(out, "method: quadrature")?;
            writeln!(out, "tol: {}", sig17(args.tol))?;
            writeln!(out, "approximation: {}", sig17(q.value))?;
            writeln!(out, "error_estimate: {}", sig17(q.error_estimate))?;
            writeln!(out, "evaluations: {}", q.evaluations)?;
            writeln!(out, "closed_form: {}", sig17(closed))?;
            writeln!(out, "abs_error: {}", sig17((q.value - closed).abs()))?;
        }
    }
    Ok(())
}

pub const RATIO_CSV_HEADER: &str = "n,log_fact_direct,log_fact_em,stirling_ratio,em_residual";

fn cmd_ratio(args: &RatioArgs, out: &mut dyn Write) -> Result<(), Failure> {
    if !(1..=MAX_TABLE_N).contains(&args.max_n) {
        return Err(Failure::Usage(format!(
            "--max-n must be in [1, {MAX_TABLE_N}], got {}",
            args.max_n
        )));
    }
    let rows = em_factorial::convergence_table(args.max_n)?;
    match args.format {
        Format::Csv => {
            writeln!(out, "{RATIO_CSV_HEADER}")?;
            for r in &rows {
                writeln!(
                    out,
                    "{},{},{},{},{}",
                    r.n,
                    sig17(r.log_fact_direct),
                    sig17(r.log_fact_em),
                    sig17(r.stirling_ratio),
                    sig17(r.em_residual)
                )?;
            }
        }
        Format::Json => {
            serde_json::to_writer_pretty(&mut *out, &rows).map_err(io::Error::from)?;
            writeln!(out)?;
        }
    }
    Ok(())
}

fn cmd_integrand(args: &IntegrandArgs, out: &mut dyn Write) -> Result<(), Failure> {
    if !(2..=MAX_SAMPLES).contains(&args.samples) {
        return Err(Failure::Usage(format!(
            "--samples must be in [2, {MAX_SAMPLES}], got {}",
            args.samples
        )));
    }
    let last = (args.samples - 1) as f64;
    writeln!(out, "x,F")?;
    for i in 0..args.samples {
        let x = 0.5 * i as f64 / last;
        writeln!(out, "{},{}", sig17(x), sig17(combined_integrand(x)?))?;
    }
    Ok(())
}
