//! Command-line surface for the library.
//!
//! Five subcommands: `decompose` (graded decomposition of one pair),
//! `oracle` (classical decomposition from the independent oracle), `count`
//! (lattice-point counts against the oracle total), `verify` (every
//! cross-check over a sweep) and `schur` (multiplicity domination between
//! two pairs). Output is JSON, CSV or plain text, to standard output or a
//! file, and is byte-deterministic for a fixed invocation. Text output is
//! never colored, so `NO_COLOR` needs no special handling.
//!
//! Exit codes: 0 on success, 1 when a verification or internal invariant
//! fails, 2 on usage or hypothesis errors.

use std::fmt::Write as _;
use std::io::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::fusion_polytope::enumerate_s;
use crate::graded_fusion::{
    graded_decompose, schur_positivity_check, GradedDecomposition, SchurComparison,
};
use crate::lr_oracle::{
    enumerate_t, klimyk_decompose, littelmann_tableau_count, TensorDecomposition,
};
use crate::root_system::{LieType, Weight};
use crate::verify::{run_sweep, VerifySummary};
use crate::{Error, Result};

fn parse_lie_type(s: &str) -> std::result::Result<LieType, String> {
    match s.to_ascii_uppercase().as_str() {
        "A2" => Ok(LieType::A2),
        "C2" => Ok(LieType::C2),
        "G2" => Ok(LieType::G2),
        _ => Err(format!("unknown type {s:?}; expected A2, C2 or G2")),
    }
}

fn parse_weight(s: &str) -> std::result::Result<Weight, String> {
    let parts: Vec<&str> = s.split(',').collect();
    if parts.len() != 2 {
        return Err(format!(
            "expected two comma-separated fundamental coordinates, got {s:?}"
        ));
    }
    let coord = |part: &str| {
        part.trim()
            .parse::<i64>()
            .map_err(|e| format!("bad coordinate {part:?}: {e}"))
    };
    Ok(Weight::new(coord(parts[0])?, coord(parts[1])?))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
    Text,
}

/// Exact graded tensor decompositions for the rank-two simple Lie algebras.
#[derive(Parser)]
#[command(name = "rank2-fusion", version, about)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Graded decomposition of V(λ) ⊗ V(μ) from the lattice model
    Decompose(PairArgs),
    /// Classical decomposition from the independent oracle
    Oracle(PairArgs),
    /// Lattice-point counts for one pair against the oracle total
    Count(PairArgs),
    /// Run every cross-check over a sweep of pairs
    Verify(VerifyArgs),
    /// Compare two tensor pairs for multiplicity domination
    Schur(SchurArgs),
}

#[derive(Args)]
struct PairArgs {
    /// Lie algebra type: A2, C2 or G2
    #[arg(long = "type", value_parser = parse_lie_type)]
    ty: LieType,
    /// First factor, as fundamental coordinates "a,b"
    #[arg(long, value_parser = parse_weight)]
    lambda: Weight,
    /// Second factor, as fundamental coordinates "a,b"
    #[arg(long, value_parser = parse_weight)]
    mu: Weight,
    #[command(flatten)]
    output: OutputArgs,
}

#[derive(Args)]
struct VerifyArgs {
    /// Lie algebra type: A2, C2 or G2
    #[arg(long = "type", value_parser = parse_lie_type)]
    ty: LieType,
    /// Largest fundamental coordinate in the sweep
    #[arg(long, default_value_t = 3, value_parser = clap::value_parser!(i64).range(0..))]
    max: i64,
    /// Number of worker threads (default: all cores)
    #[arg(long, value_parser = clap::value_parser!(usize))]
    jobs: Option<usize>,
    #[command(flatten)]
    output: OutputArgs,
}

#[derive(Args)]
struct SchurArgs {
    /// Lie algebra type: A2, C2 or G2
    #[arg(long = "type", value_parser = parse_lie_type)]
    ty: LieType,
    /// First factor of the left pair
    #[arg(long, value_parser = parse_weight)]
    lambda: Weight,
    /// Second factor of the left pair
    #[arg(long, value_parser = parse_weight)]
    mu: Weight,
    /// First factor of the right pair
    #[arg(long, value_parser = parse_weight)]
    lambda2: Weight,
    /// Second factor of the right pair
    #[arg(long, value_parser = parse_weight)]
    mu2: Weight,
    #[command(flatten)]
    output: OutputArgs,
}

#[derive(Args)]
struct OutputArgs {
    /// Output format
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Write output to this file instead of standard output
    #[arg(long)]
    out: Option<PathBuf>,
}

/// Parses the command line, runs the requested command and returns the
/// process exit code.
pub fn run() -> ExitCode {
    let cli = Cli::parse();
    match execute(cli.command) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code_for(&e))
        }
    }
}

fn exit_code_for(e: &Error) -> u8 {
    match e {
        Error::NondominantWeight(..) | Error::G2Inadmissible(..) | Error::SchurHypothesis(_) => 2,
        Error::Unbounded { .. } | Error::InvariantViolation(_) | Error::Io(_) => 1,
    }
}

fn execute(command: Command) -> Result<ExitCode> {
    match command {
        Command::Decompose(args) => {
            let d = graded_decompose(args.ty, args.lambda, args.mu)?;
            emit(&args.output, render_decomposition(&d, args.output.format))?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Oracle(args) => {
            let d = klimyk_decompose(args.ty, args.lambda, args.mu)?;
            emit(&args.output, render_oracle(&d, args.output.format))?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Count(args) => {
            let report = count_report(args.ty, args.lambda, args.mu)?;
            emit(&args.output, render_count(&report, args.output.format))?;
            if report.s_points != report.t_points || report.t_points != report.oracle_total {
                return Err(Error::InvariantViolation(format!(
                    "counts disagree for {}: λ={}, μ={}: |S| = {}, |T| = {}, oracle total = {}",
                    report.ty,
                    report.lambda,
                    report.mu,
                    report.s_points,
                    report.t_points,
                    report.oracle_total
                )));
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Verify(args) => {
            let summary = match args.jobs {
                Some(jobs) => rayon::ThreadPoolBuilder::new()
                    .num_threads(jobs)
                    .build()
                    .expect("failed to build worker thread pool")
                    .install(|| run_sweep(args.ty, args.max)),
                None => run_sweep(args.ty, args.max),
            };
            emit(&args.output, render_summary(&summary, args.output.format))?;
            Ok(if summary.all_pass() {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            })
        }
        Command::Schur(args) => {
            let cmp =
                schur_positivity_check(args.ty, args.lambda, args.mu, args.lambda2, args.mu2)?;
            emit(&args.output, render_schur(&cmp, args.output.format))?;
            Ok(if cmp.dominated {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            })
        }
    }
}

fn emit(output: &OutputArgs, content: String) -> Result<()> {
    match &output.out {
        Some(path) => std::fs::write(path, content)?,
        None => std::io::stdout().lock().write_all(content.as_bytes())?,
    }
    Ok(())
}

fn to_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("serialization cannot fail");
    s.push('\n');
    s
}

fn render_decomposition(d: &GradedDecomposition, format: Format) -> String {
    match format {
        Format::Json => to_json(d),
        Format::Csv => {
            let mut out =
                String::from("type,lambda1,lambda2,mu1,mu2,nu1,nu2,degree,multiplicity\n");
            for (nu, poly) in d.entries_desc() {
                for (degree, &coeff) in poly.coeffs().iter().enumerate() {
                    if coeff == 0 {
                        continue;
                    }
                    writeln!(
                        out,
                        "{},{},{},{},{},{},{},{},{}",
                        d.ty,
                        d.lambda.w1,
                        d.lambda.w2,
                        d.mu.w1,
                        d.mu.w2,
                        nu.w1,
                        nu.w2,
                        degree,
                        coeff
                    )
                    .unwrap();
                }
            }
            out
        }
        Format::Text => {
            let mut out = format!("{}: V{} ⊗ V{}\n", d.ty, d.lambda, d.mu);
            for (nu, poly) in d.entries_desc() {
                writeln!(out, "  {nu}: {}", poly.display()).unwrap();
            }
            out
        }
    }
}

fn render_oracle(d: &TensorDecomposition, format: Format) -> String {
    match format {
        Format::Json => to_json(d),
        Format::Csv => {
            let mut out = String::from("type,lambda1,lambda2,mu1,mu2,nu1,nu2,multiplicity\n");
            for (nu, mult) in d.entries_desc() {
                writeln!(
                    out,
                    "{},{},{},{},{},{},{},{}",
                    d.ty, d.lambda.w1, d.lambda.w2, d.mu.w1, d.mu.w2, nu.w1, nu.w2, mult
                )
                .unwrap();
            }
            out
        }
        Format::Text => {
            let mut out = format!("{}: V{} ⊗ V{}\n", d.ty, d.lambda, d.mu);
            for (nu, mult) in d.entries_desc() {
                writeln!(out, "  {nu}: {mult}").unwrap();
            }
            out
        }
    }
}

/// Counts reported by the `count` subcommand.
#[derive(Debug, Clone, Serialize)]
struct CountReport {
    #[serde(rename = "type")]
    ty: LieType,
    lambda: Weight,
    mu: Weight,
    s_points: i64,
    t_points: i64,
    oracle_total: i64,
    /// Present for G2 only: the tableau count.
    #[serde(skip_serializing_if = "Option::is_none")]
    tableaux: Option<i64>,
}

fn count_report(ty: LieType, lambda: Weight, mu: Weight) -> Result<CountReport> {
    let s_points = enumerate_s(ty, lambda, mu)?.len() as i64;
    let t_points = enumerate_t(ty, lambda, mu)?.len() as i64;
    let oracle_total = klimyk_decompose(ty, lambda, mu)?.total();
    let tableaux = if ty == LieType::G2 {
        let (l, m) = if mu.w2 == 0 {
            (lambda, mu)
        } else {
            (mu, lambda)
        };
        Some(littelmann_tableau_count(l, m)?)
    } else {
        None
    };
    Ok(CountReport {
        ty,
        lambda,
        mu,
        s_points,
        t_points,
        oracle_total,
        tableaux,
    })
}

fn render_count(report: &CountReport, format: Format) -> String {
    match format {
        Format::Json => to_json(report),
        Format::Csv => {
            let mut out = String::from(
                "type,lambda1,lambda2,mu1,mu2,s_points,t_points,oracle_total,tableaux\n",
            );
            writeln!(
                out,
                "{},{},{},{},{},{},{},{},{}",
                report.ty,
                report.lambda.w1,
                report.lambda.w2,
                report.mu.w1,
                report.mu.w2,
                report.s_points,
                report.t_points,
                report.oracle_total,
                report.tableaux.map_or(String::new(), |t| t.to_string()),
            )
            .unwrap();
            out
        }
        Format::Text => {
            let mut out = format!("{}: V{} ⊗ V{}\n", report.ty, report.lambda, report.mu);
            writeln!(out, "  S points: {}", report.s_points).unwrap();
            writeln!(out, "  T points: {}", report.t_points).unwrap();
            writeln!(out, "  oracle total: {}", report.oracle_total).unwrap();
            if let Some(t) = report.tableaux {
                writeln!(out, "  tableaux: {t}").unwrap();
            }
            out
        }
    }
}

fn render_summary(summary: &VerifySummary, format: Format) -> String {
    match format {
        Format::Json => to_json(summary),
        Format::Csv => {
            let mut out = String::from("type,max_coord,pairs,checks,failures\n");
            writeln!(
                out,
                "{},{},{},{},{}",
                summary.ty,
                summary.max_coord,
                summary.pairs,
                summary.checks,
                summary.failures.len()
            )
            .unwrap();
            out
        }
        Format::Text => summary.render_text(),
    }
}

fn render_schur(cmp: &SchurComparison, format: Format) -> String {
    match format {
        Format::Json => to_json(cmp),
        Format::Csv => {
            let mut out = String::from("type,nu1,nu2,left,right\n");
            for &(nu, left, right) in &cmp.rows {
                writeln!(out, "{},{},{},{},{}", cmp.ty, nu.w1, nu.w2, left, right).unwrap();
            }
            out
        }
        Format::Text => {
            let mut out = format!(
                "{}: V{} ⊗ V{} vs V{} ⊗ V{}\n",
                cmp.ty, cmp.pair_left.0, cmp.pair_left.1, cmp.pair_right.0, cmp.pair_right.1
            );
            writeln!(out, "  {:<12} {:>6} {:>6}", "nu", "left", "right").unwrap();
            for &(nu, left, right) in &cmp.rows {
                writeln!(out, "  {:<12} {left:>6} {right:>6}", nu.to_string()).unwrap();
            }
            writeln!(out, "dominated: {}", cmp.dominated).unwrap();
            out
        }
    }
}
