//! Command-line front end: evaluate any target, compare it with its
//! references, print convergence tables and run the golden suite.

pub mod error;
pub mod eval;
pub mod format;
pub mod report;
pub mod reproduce;
pub mod scenario;
pub mod target;

use std::fs;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};

use crate::error::{usage, CliError, CliResult};
use crate::eval::{evaluate, reference};
use crate::report::{compare_report, eval_report, table_rows, write_table, Format};
use crate::scenario::{parse_param_flag, parse_scenario_text, Scenario, ScenarioInput, MAX_TERMS_ENV};
use crate::target::{Need, Target};

pub use crate::error::CliError as Error;

pub const EXIT_OK: u8 = 0;
pub const EXIT_ERROR: u8 = 1;
/// `eval`: the series hit its term cap. `compare`: outside tolerance.
pub const EXIT_TRUNCATED: u8 = 2;
pub const EXIT_CHECK_FAILED: u8 = 3;

#[derive(Debug, Parser)]
#[command(
    name = "slater-addition",
    version,
    about = "One-range addition theorems and their amplitude integrals"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Evaluate a target: value, terms used, convergence flag.
    Eval(ScenarioArgs),
    /// Evaluate a target and its reference side by side.
    Compare(ScenarioArgs),
    /// Per-term table of a series with running sums and reference errors.
    Table(ScenarioArgs),
    /// Run the golden suite.
    Reproduce(ReproduceArgs),
    /// List targets with their parameters and references.
    List,
}

#[derive(Debug, Clone, Args)]
pub struct ScenarioArgs {
    /// Target name; may instead come from `target =` in the scenario file.
    pub target: Option<String>,
    #[arg(long)]
    pub scenario: Option<PathBuf>,
    /// Parameter override, repeatable; applied after the scenario file.
    #[arg(long = "param", value_name = "KEY=VALUE")]
    pub params: Vec<String>,
    #[arg(long, value_enum)]
    pub format: Option<Format>,
    /// Relative tolerance for `compare` (default 1e-6 or the scenario's `tol`).
    #[arg(long)]
    pub tol: Option<f64>,
    #[arg(long, default_value_t = 9)]
    pub digits: usize,
    /// Evaluate with k > 1, outside the proven convergence region.
    #[arg(long)]
    pub allow_k_gt_1: bool,
    /// Reference to use instead of the target's default.
    #[arg(long)]
    pub oracle: Option<String>,
    /// Write the table here instead of stdout.
    #[arg(long)]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Clone, Args)]
pub struct ReproduceArgs {
    /// Only run checks whose name contains this string.
    #[arg(long)]
    pub filter: Option<String>,
}

fn build_scenario(args: &ScenarioArgs) -> CliResult<Scenario> {
    let mut entries = Vec::new();
    if let Some(path) = &args.scenario {
        let text = fs::read_to_string(path).map_err(|source| CliError::Io {
            path: path.display().to_string(),
            source,
        })?;
        entries = parse_scenario_text(&text)?;
    }
    for p in &args.params {
        entries.push(parse_param_flag(p)?);
    }
    Scenario::build(ScenarioInput {
        target: args.target.clone(),
        entries,
        tol: args.tol,
        allow_k_gt_1: args.allow_k_gt_1,
        env_max_terms: std::env::var(MAX_TERMS_ENV).ok(),
    })
}

fn cmd_eval(args: &ScenarioArgs, out: &mut dyn Write) -> CliResult<u8> {
    let s = build_scenario(args)?;
    let e = evaluate(&s)?;
    eval_report(&e, args.digits).write(args.format, out)?;
    Ok(if e.converged { EXIT_OK } else { EXIT_TRUNCATED })
}

fn cmd_compare(args: &ScenarioArgs, out: &mut dyn Write) -> CliResult<u8> {
    let s = build_scenario(args)?;
    let r = reference(&s, args.oracle.as_deref())?
        .ok_or_else(|| usage(format!("{} has no registered reference to compare against", s.target)))?;
    let e = evaluate(&s)?;
    let (report, within) = compare_report(&e, &r, s.tol, args.digits);
    report.write(args.format, out)?;
    Ok(if within { EXIT_OK } else { EXIT_TRUNCATED })
}

fn cmd_table(args: &ScenarioArgs, out: &mut dyn Write) -> CliResult<u8> {
    let s = build_scenario(args)?;
    let e = evaluate(&s)?;
    let r = reference(&s, args.oracle.as_deref())?;
    let rows = table_rows(&e, r.as_ref());
    let format = args.format.unwrap_or(Format::Csv);
    match &args.output {
        Some(path) => {
            let io = |source| CliError::Io {
                path: path.display().to_string(),
                source,
            };
            let mut buf = Vec::new();
            write_table(&rows, r.is_some(), format, args.digits, &mut buf)?;
            fs::write(path, buf).map_err(io)?;
        }
        None => write_table(&rows, r.is_some(), format, args.digits, out)?,
    }
    Ok(EXIT_OK)
}

fn cmd_reproduce(args: &ReproduceArgs, out: &mut dyn Write) -> CliResult<u8> {
    run_reproduce(&reproduce::registry(), args.filter.as_deref(), out)
}

/// Runs `checks` (optionally filtered), prints one line per check and
/// returns 0 if all pass, 3 otherwise.
pub fn run_reproduce(checks: &[reproduce::Check], filter: Option<&str>, out: &mut dyn Write) -> CliResult<u8> {
    let outcomes = reproduce::run_checks(checks, filter);
    if outcomes.is_empty() {
        return Err(usage(format!("no check matches `{}`", filter.unwrap_or_default())));
    }
    reproduce::write_outcomes(&outcomes, out).map_err(report::stdout_err)?;
    Ok(if outcomes.iter().all(|o| o.passed) {
        EXIT_OK
    } else {
        EXIT_CHECK_FAILED
    })
}

fn cmd_list(out: &mut dyn Write) -> CliResult<u8> {
    for &t in Target::ALL {
        let params: Vec<String> = t
            .params()
            .iter()
            .map(|p| match p.need {
                Need::Required => p.name.to_string(),
                Need::Default(d) => format!("{}={d}", p.name),
                Need::Optional => format!("[{}]", p.name),
            })
            .collect();
        let mut line = format!("{}  {}", t.name(), params.join(" "));
        if !t.aliases().is_empty() {
            line += &format!("  (alias {})", t.aliases().join(", "));
        }
        if !t.references().is_empty() {
            line += &format!("  refs: {}", t.references().join(", "));
        }
        writeln!(out, "{line}").map_err(report::stdout_err)?;
    }
    Ok(EXIT_OK)
}

/// Runs one parsed command line and returns its exit code. Errors are
/// reported on `err`.
pub fn run(cli: &Cli, out: &mut dyn Write, err: &mut dyn Write) -> u8 {
    let result = match &cli.command {
        Command::Eval(a) => cmd_eval(a, out),
        Command::Compare(a) => cmd_compare(a, out),
        Command::Table(a) => cmd_table(a, out),
        Command::Reproduce(a) => cmd_reproduce(a, out),
        Command::List => cmd_list(out),
    };
    match result {
        Ok(code) => code,
        // A reader such as `head` closed the pipe; nothing left to report.
        Err(e) if is_broken_pipe(&e) => EXIT_OK,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_ERROR
        }
    }
}

fn is_broken_pipe(e: &CliError) -> bool {
    use std::io::ErrorKind::BrokenPipe;
    match e {
        CliError::Io { source, .. } => source.kind() == BrokenPipe,
        CliError::Json(j) => j.io_error_kind() == Some(BrokenPipe),
        CliError::Csv(c) => matches!(c.kind(), csv::ErrorKind::Io(io) if io.kind() == BrokenPipe),
        _ => false,
    }
}
