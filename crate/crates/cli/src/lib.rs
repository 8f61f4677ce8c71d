//! Argument parsing and command execution for the `kesten` binary.
//!
//! Every command writes one JSON document to standard output. Exit codes:
//! 0 on success, 1 when an identity or Hankel check finds a counterexample,
//! 2 on usage or domain errors.

use std::ffi::OsString;
use std::str::FromStr;
use std::thread;

use clap::{Args, Parser, Subcommand};
use kesten_core::identities::{hankel_check, registry, verify, HankelFamily, IdentityId, IdentityReport};
use kesten_core::moments::{moment_by, moment_series, KestenParams, MomentMethod};
use kesten_core::quadrature::{power_moment_by_quadrature, DEFAULT_EVAL_BUDGET};
use kesten_core::sequences::SequenceId;
use kesten_core::{Error, Rational};
use serde::Serialize;
use serde_json::{json, Value};

/// Environment variable capping the number of integrand evaluations.
pub const BUDGET_VAR: &str = "KESTEN_EVAL_BUDGET";

#[derive(Debug, Parser)]
#[command(name = "kesten", version, about = "Kesten-distribution moments and Catalan-family identities")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, PartialEq, Subcommand)]
pub enum Command {
    /// Terms of an integer sequence or entries of a triangle.
    Seq(SeqArgs),
    /// An even moment M_2m(p, r) by one of the available methods.
    Moment(MomentArgs),
    /// Verify an identity (or all of them) over a range of its index.
    Verify(VerifyArgs),
    /// Check Hankel minors of a moment sequence for nonnegativity.
    Hankel(HankelArgs),
}

#[derive(Debug, Clone, PartialEq, Args)]
pub struct SeqArgs {
    /// catalan, fibonacci, lucas, fine, triangleT, triangleB or ballotS.
    #[arg(long)]
    pub name: SequenceId,
    /// Number of terms (one-index sequences).
    #[arg(long, conflicts_with_all = ["row", "col"])]
    pub count: Option<usize>,
    /// First index (one-index sequences; may be negative for fibonacci and lucas).
    #[arg(long, allow_hyphen_values = true, conflicts_with_all = ["row", "col"])]
    pub start: Option<i64>,
    /// Triangle row.
    #[arg(long)]
    pub row: Option<u32>,
    /// Triangle column; the whole row if omitted.
    #[arg(long, requires = "row")]
    pub col: Option<u32>,
}

#[derive(Debug, Clone, PartialEq, Args)]
pub struct MomentArgs {
    #[arg(long, allow_hyphen_values = true)]
    pub p: Rational,
    #[arg(long, allow_hyphen_values = true)]
    pub r: Rational,
    /// Half the moment order: computes M_2m.
    #[arg(long)]
    pub m: u32,
    /// closed, series, sform, tform, bform, comment1 or quad.
    #[arg(long, default_value = "closed")]
    pub method: MomentMethod,
    /// Truncation tolerance (series) or relative tolerance (quad).
    #[arg(long)]
    pub tol: Option<Rational>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum VerifyTarget {
    All,
    One(IdentityId),
}

impl FromStr for VerifyTarget {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        if s == "all" {
            Ok(VerifyTarget::All)
        } else {
            s.parse().map(VerifyTarget::One)
        }
    }
}

#[derive(Debug, Clone, PartialEq, Args)]
pub struct VerifyArgs {
    /// Identity name, or `all`.
    #[arg(long)]
    pub id: VerifyTarget,
    /// Largest index to check; each identity's default if omitted.
    #[arg(long)]
    pub m_max: Option<u32>,
}

#[derive(Debug, Clone, PartialEq, Args)]
pub struct HankelArgs {
    /// kestenEven or truncatedConvex.
    #[arg(long)]
    pub family: HankelFamily,
    #[arg(long, allow_hyphen_values = true)]
    pub t: Rational,
    /// Mixing weight for truncatedConvex.
    #[arg(long, allow_hyphen_values = true, default_value = "0")]
    pub d: Rational,
    /// Order of the shifted Hankel matrix; uses 2·size + 1 terms.
    #[arg(long, default_value_t = 5)]
    pub size: usize,
}

/// Parses a full argument vector, program name first.
pub fn parse_args<I, T>(argv: I) -> Result<Command, clap::Error>
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    Cli::try_parse_from(argv).map(|cli| cli.command)
}

/// Exit code and JSON document produced by a command.
#[derive(Debug, Clone, PartialEq)]
pub struct Output {
    pub code: u8,
    pub json: Value,
}

impl Output {
    fn ok(json: Value) -> Self {
        Output { code: 0, json }
    }

    fn error(err: &Error) -> Self {
        Output { code: 2, json: json!({ "error": err.code(), "message": err.to_string() }) }
    }
}

/// Reads the evaluation budget from [`BUDGET_VAR`].
pub fn budget_from_env() -> Result<u64, Error> {
    match std::env::var(BUDGET_VAR) {
        Err(_) => Ok(DEFAULT_EVAL_BUDGET),
        Ok(s) => {
            s.trim().parse().map_err(|_| Error::Usage(format!("{BUDGET_VAR} must be a nonnegative integer, got {s:?}")))
        }
    }
}

/// Runs a command with the evaluation budget from the environment.
pub fn run(cmd: &Command) -> Output {
    match budget_from_env() {
        Ok(budget) => run_with_budget(cmd, budget),
        Err(e) => Output::error(&e),
    }
}

pub fn run_with_budget(cmd: &Command, budget: u64) -> Output {
    let result = match cmd {
        Command::Seq(args) => seq(args),
        Command::Moment(args) => moment(args, budget),
        Command::Verify(args) => verify_cmd(args),
        Command::Hankel(args) => hankel(args),
    };
    result.unwrap_or_else(|e| Output::error(&e))
}

fn seq(args: &SeqArgs) -> Result<Output, Error> {
    let id = args.name;
    let terms = if id.is_triangle() {
        let row = args.row.ok_or_else(|| Error::Usage(format!("{id} needs --row")))?;
        match args.col {
            Some(col) => vec![id.entry(row, col)?],
            None => id.row(row)?,
        }
    } else {
        if args.row.is_some() {
            return Err(Error::Usage(format!("{id} takes --count and --start, not --row")));
        }
        let count = args.count.ok_or_else(|| Error::Usage(format!("{id} needs --count")))?;
        id.terms(args.start.unwrap_or(0), count)?
    };
    Ok(Output::ok(Value::from(terms.iter().map(|t| t.to_string()).collect::<Vec<_>>())))
}

#[derive(Serialize)]
#[serde(rename_all = "camelCase")]
struct QuadMoment {
    m: u32,
    method: &'static str,
    value: f64,
    estimated_error: f64,
    evaluations: u64,
}

fn to_json<T: Serialize>(value: &T) -> Result<Value, Error> {
    serde_json::to_value(value).map_err(|e| Error::Internal(e.to_string()))
}

fn moment(args: &MomentArgs, budget: u64) -> Result<Output, Error> {
    let params = KestenParams::classify(args.p.clone(), args.r.clone())?;
    let json = match args.method {
        MomentMethod::Quadrature => {
            let tol = args.tol.as_ref().map_or(1e-12, Rational::to_f64);
            let result = power_moment_by_quadrature(2 * args.m, args.p.to_f64(), args.r.to_f64(), tol, budget)?;
            to_json(&QuadMoment {
                m: args.m,
                method: MomentMethod::Quadrature.as_str(),
                value: result.value,
                estimated_error: result.estimated_error,
                evaluations: result.evaluations,
            })?
        }
        MomentMethod::Series if args.tol.is_some() => {
            to_json(&moment_series(args.m, &params, args.tol.as_ref().expect("checked"))?)?
        }
        method => to_json(&moment_by(method, args.m, &params)?)?,
    };
    Ok(Output::ok(json))
}

fn report_output(reports: &[IdentityReport]) -> Result<Output, Error> {
    for r in reports {
        let status = if r.passed { "passed" } else { "counterexample" };
        eprintln!("{} {}: {status}", r.id, r.range);
    }
    let code = if reports.iter().all(|r| r.passed) { 0 } else { 1 };
    Ok(Output { code, json: Value::Null })
}

fn verify_cmd(args: &VerifyArgs) -> Result<Output, Error> {
    match args.id {
        VerifyTarget::One(id) => {
            let report = verify(id, args.m_max.unwrap_or(id.entry().default_max))?;
            let out = report_output(std::slice::from_ref(&report))?;
            Ok(Output { json: to_json(&report)?, ..out })
        }
        VerifyTarget::All => {
            // One worker per identity; results are collected in registry order.
            let results: Vec<Result<IdentityReport, Error>> = thread::scope(|scope| {
                let handles: Vec<_> = registry()
                    .iter()
                    .map(|entry| scope.spawn(move || verify(entry.id, args.m_max.unwrap_or(entry.default_max))))
                    .collect();
                handles.into_iter().map(|h| h.join().expect("verification worker panicked")).collect()
            });
            let reports = results.into_iter().collect::<Result<Vec<_>, _>>()?;
            let out = report_output(&reports)?;
            Ok(Output { json: to_json(&reports)?, ..out })
        }
    }
}

fn hankel(args: &HankelArgs) -> Result<Output, Error> {
    let report = hankel_check(args.family, &args.t, &args.d, args.size)?;
    let out = report_output(std::slice::from_ref(&report))?;
    Ok(Output { json: to_json(&report)?, ..out })
}
