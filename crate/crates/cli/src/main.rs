//! Command-line front end: verification, sweeps, enumeration, the three
//! maps with step traces, and dot-diagram rendering.
//!
//! Exit codes: 0 on success/verified, 1 when a check fails (the witness is
//! printed), 2 on usage or parse errors.

use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use agkey::bijection::{js_extract, js_insert_traced, phi_bar_inv, phi_bar_traced, InsertionTrace};
use agkey::diagram::{render, Glyphs};
use agkey::families::{enumerate_a, enumerate_b, enumerate_o, enumerate_o_all};
use agkey::involution::{classify, f_statistic, psi};
use agkey::verifier::{
    summary, sweep, verify_genfuncs, verify_involution, verify_key_identity, verify_lemma2,
    verify_phi_bar, verify_theorem22,
};
use agkey::{Check, DistinctPartition, Error, OContext, Overpartition, Partition, VerifyReport};

#[derive(Parser)]
#[command(
    name = "agkey",
    version,
    about = "Exact q-series and overpartition combinatorics for the Alladi-Gordon key identity"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run one verification check at the given parameters
    Verify {
        check: CheckArg,
        #[arg(long)]
        i: u64,
        #[arg(long)]
        j: u64,
        /// Cell index for the per-k checks (phi-bar, genfunc)
        #[arg(long)]
        k: Option<u64>,
        /// Emit the report as one JSON object
        #[arg(long)]
        json: bool,
    },
    /// Run checks over every cell 0 <= j <= i <= max-i
    Sweep {
        #[arg(long = "max-i")]
        max_i: u64,
        /// Comma-separated subset of checks (default: all)
        #[arg(long, value_delimiter = ',')]
        checks: Vec<CheckArg>,
        /// Emit newline-delimited JSON reports
        #[arg(long)]
        json: bool,
    },
    /// List the members of A(i,k), B(j,k), O(i,j,k) or all of O(i,j)
    Enumerate {
        #[arg(long)]
        set: SetArg,
        /// Required for sets A and O
        #[arg(long)]
        i: Option<u64>,
        /// Required for sets B and O
        #[arg(long)]
        j: Option<u64>,
        /// Required for sets A and B; for O, restricts to one part count
        #[arg(long)]
        k: Option<u64>,
        /// Emit newline-delimited JSON records
        #[arg(long)]
        json: bool,
    },
    /// Apply one of the maps, optionally with a step trace
    Map {
        op: MapOp,
        /// Family parameter i (phi-bar, phi-bar-inv, psi)
        #[arg(long)]
        i: Option<u64>,
        /// Family parameter j (phi-bar, phi-bar-inv, psi)
        #[arg(long)]
        j: Option<u64>,
        /// Family parameter k (phi-bar, phi-bar-inv)
        #[arg(long)]
        k: Option<u64>,
        /// Distinct values to insert, e.g. `5,3,0`
        #[arg(long)]
        alpha: Option<String>,
        /// Plain partition, e.g. `9,6,5,2,2,0`
        #[arg(long)]
        beta: Option<String>,
        /// Member of A(i,k), e.g. `8,7`
        #[arg(long)]
        gamma: Option<String>,
        /// Overpartition with trailing-apostrophe overlines, e.g. `4',3',2`
        #[arg(long)]
        lambda: Option<String>,
        /// Print each insertion step (insert, phi-bar)
        #[arg(long)]
        trace: bool,
    },
    /// Draw the dot diagram of a weighted overpartition
    Render {
        #[arg(long)]
        lambda: String,
        #[arg(long)]
        i: u64,
        /// Also draw the companion rectangle of O(i,j)
        #[arg(long)]
        j: Option<u64>,
        /// Use the glyphs from the figures instead of ASCII
        #[arg(long)]
        unicode: bool,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum CheckArg {
    KeyIdentity,
    Lemma2,
    Theorem22,
    PhiBar,
    Genfunc,
    Involution,
}

impl From<CheckArg> for Check {
    fn from(arg: CheckArg) -> Check {
        match arg {
            CheckArg::KeyIdentity => Check::KeyIdentity,
            CheckArg::Lemma2 => Check::Lemma2,
            CheckArg::Theorem22 => Check::Theorem22,
            CheckArg::PhiBar => Check::PhiBar,
            CheckArg::Genfunc => Check::Genfunc,
            CheckArg::Involution => Check::Involution,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum SetArg {
    #[value(name = "A", alias = "a")]
    A,
    #[value(name = "B", alias = "b")]
    B,
    #[value(name = "O", alias = "o")]
    O,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum MapOp {
    Insert,
    Extract,
    PhiBar,
    PhiBarInv,
    Psi,
}

/// Distinguishes inputs that are malformed (exit 2) from well-formed inputs
/// that fail a semantic check (exit 1, with the error as witness).
fn is_usage_error(error: &Error) -> bool {
    matches!(
        error,
        Error::Parse { .. }
            | Error::ParameterRange(_)
            | Error::InvalidPartition(_)
            | Error::InvalidOverpartition(_)
    )
}

enum Outcome {
    Ok,
    CheckFailed,
}

fn main() -> ExitCode {
    // Die quietly when a downstream pipe closes mid-stream (sweep | head).
    #[cfg(unix)]
    unsafe {
        libc::signal(libc::SIGPIPE, libc::SIG_DFL);
    }
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(Outcome::Ok) => ExitCode::SUCCESS,
        Ok(Outcome::CheckFailed) => ExitCode::from(1),
        Err(message) => {
            eprintln!("error: {message}");
            ExitCode::from(2)
        }
    }
}

fn run(command: Command) -> Result<Outcome, String> {
    match command {
        Command::Verify {
            check,
            i,
            j,
            k,
            json,
        } => run_verify(check, i, j, k, json),
        Command::Sweep {
            max_i,
            checks,
            json,
        } => run_sweep(max_i, &checks, json),
        Command::Enumerate { set, i, j, k, json } => run_enumerate(set, i, j, k, json),
        Command::Map {
            op,
            i,
            j,
            k,
            alpha,
            beta,
            gamma,
            lambda,
            trace,
        } => run_map(
            op,
            Params {
                i,
                j,
                k,
                alpha,
                beta,
                gamma,
                lambda,
                trace,
            },
        ),
        Command::Render {
            lambda,
            i,
            j,
            unicode,
        } => run_render(&lambda, i, j, unicode),
    }
}

fn print_report(report: &VerifyReport, json: bool) -> Result<(), String> {
    if json {
        println!(
            "{}",
            serde_json::to_string(report).map_err(|e| e.to_string())?
        );
    } else {
        println!("{}", report.status_line());
        if let Some(witness) = &report.witness {
            println!(
                "witness: {}",
                serde_json::to_string(witness).map_err(|e| e.to_string())?
            );
        }
    }
    Ok(())
}

fn run_verify(
    check: CheckArg,
    i: u64,
    j: u64,
    k: Option<u64>,
    json: bool,
) -> Result<Outcome, String> {
    let check: Check = check.into();
    if !check.per_k() && k.is_some() {
        return Err(format!("--k does not apply to the {check} check"));
    }
    let report = match check {
        Check::KeyIdentity => verify_key_identity(i, j),
        Check::Lemma2 => Ok(verify_lemma2(i, j)),
        Check::Theorem22 => verify_theorem22(i, j),
        Check::Involution => verify_involution(i, j),
        Check::PhiBar | Check::Genfunc => {
            let k = k.ok_or_else(|| format!("--k is required for the {check} check"))?;
            if check == Check::PhiBar {
                verify_phi_bar(i, j, k)
            } else {
                verify_genfuncs(i, j, k)
            }
        }
    }
    .map_err(|error| error.to_string())?;
    print_report(&report, json)?;
    Ok(if report.passed {
        Outcome::Ok
    } else {
        Outcome::CheckFailed
    })
}

fn run_sweep(max_i: u64, checks: &[CheckArg], json: bool) -> Result<Outcome, String> {
    let selected: Vec<Check> = checks.iter().map(|&arg| arg.into()).collect();
    let reports = sweep(max_i, &selected);
    for report in &reports {
        print_report(report, json)?;
    }
    let line = summary(&reports);
    if json {
        eprintln!("{line}");
    } else {
        println!("{line}");
    }
    Ok(if reports.iter().all(|report| report.passed) {
        Outcome::Ok
    } else {
        Outcome::CheckFailed
    })
}

fn need(value: Option<u64>, flag: &str, context: &str) -> Result<u64, String> {
    value.ok_or_else(|| format!("--{flag} is required for {context}"))
}

fn refuse(absent: bool, flag: &str, context: &str) -> Result<(), String> {
    if absent {
        Ok(())
    } else {
        Err(format!("--{flag} does not apply to {context}"))
    }
}

#[derive(Serialize)]
struct PlainRecord<'a> {
    set: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    i: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    j: Option<u64>,
    k: u64,
    parts: &'a [u64],
}

#[derive(Serialize)]
struct PartRecord {
    value: u64,
    overlined: bool,
}

#[derive(Serialize)]
struct ORecord {
    parts: Vec<PartRecord>,
    i: u64,
    j: u64,
    k: u64,
    weight: u64,
}

fn emit_json(record: &impl Serialize) -> Result<(), String> {
    println!(
        "{}",
        serde_json::to_string(record).map_err(|e| e.to_string())?
    );
    Ok(())
}

fn run_enumerate(
    set: SetArg,
    i: Option<u64>,
    j: Option<u64>,
    k: Option<u64>,
    json: bool,
) -> Result<Outcome, String> {
    match set {
        SetArg::A => {
            refuse(j.is_none(), "j", "--set A")?;
            let (i, k) = (need(i, "i", "--set A")?, need(k, "k", "--set A")?);
            let members = enumerate_a(i, k).map_err(|error| error.to_string())?;
            for member in members {
                if json {
                    emit_json(&PlainRecord {
                        set: "A",
                        i: Some(i),
                        j: None,
                        k,
                        parts: member.parts(),
                    })?;
                } else {
                    println!("{member}");
                }
            }
        }
        SetArg::B => {
            refuse(i.is_none(), "i", "--set B")?;
            let (j, k) = (need(j, "j", "--set B")?, need(k, "k", "--set B")?);
            let members = enumerate_b(j, k).map_err(|error| error.to_string())?;
            for member in members {
                if json {
                    emit_json(&PlainRecord {
                        set: "B",
                        i: None,
                        j: Some(j),
                        k,
                        parts: member.parts(),
                    })?;
                } else {
                    println!("{member}");
                }
            }
        }
        SetArg::O => {
            let (i, j) = (need(i, "i", "--set O")?, need(j, "j", "--set O")?);
            let tagged: Vec<(u64, Overpartition)> = match k {
                Some(k) => {
                    let ctx = OContext::new(i, j, k).map_err(|error| error.to_string())?;
                    enumerate_o(ctx).into_iter().map(|m| (k, m)).collect()
                }
                None => enumerate_o_all(i, j).map_err(|error| error.to_string())?,
            };
            for (k, member) in tagged {
                if json {
                    emit_json(&ORecord {
                        parts: member
                            .parts()
                            .iter()
                            .map(|part| PartRecord {
                                value: part.value,
                                overlined: part.overlined,
                            })
                            .collect(),
                        i,
                        j,
                        k,
                        weight: i - k + 1,
                    })?;
                } else {
                    println!("{member}");
                }
            }
        }
    }
    Ok(Outcome::Ok)
}

struct Params {
    i: Option<u64>,
    j: Option<u64>,
    k: Option<u64>,
    alpha: Option<String>,
    beta: Option<String>,
    gamma: Option<String>,
    lambda: Option<String>,
    trace: bool,
}

fn parse_arg<T>(text: &str) -> Result<T, String>
where
    T: std::str::FromStr<Err = Error>,
{
    text.parse().map_err(|error: Error| error.to_string())
}

/// Reports a failed semantic check on stdout and signals exit code 1, or
/// surfaces malformed input as a usage error.
fn check_failed(error: Error) -> Result<Outcome, String> {
    if is_usage_error(&error) {
        Err(error.to_string())
    } else {
        println!("FAIL: {error}");
        Ok(Outcome::CheckFailed)
    }
}

fn print_trace(trace: &InsertionTrace, with_steps: bool) {
    if with_steps {
        for step in trace.steps() {
            println!("insert {} -> {}", step.inserted, step.result);
        }
    }
    println!("{}", trace.result());
}

fn run_map(op: MapOp, params: Params) -> Result<Outcome, String> {
    let Params {
        i,
        j,
        k,
        alpha,
        beta,
        gamma,
        lambda,
        trace,
    } = params;
    match op {
        MapOp::Insert => {
            refuse(i.is_none(), "i", "map insert")?;
            refuse(j.is_none(), "j", "map insert")?;
            refuse(k.is_none(), "k", "map insert")?;
            refuse(gamma.is_none(), "gamma", "map insert")?;
            refuse(lambda.is_none(), "lambda", "map insert")?;
            let alpha_text = alpha.ok_or("--alpha is required for map insert")?;
            let beta_text = beta.ok_or("--beta is required for map insert")?;
            let alpha: DistinctPartition = parse_arg(&alpha_text)?;
            let beta: Partition = parse_arg(&beta_text)?;
            match js_insert_traced(&alpha, &beta) {
                Ok(result) => {
                    print_trace(&result, trace);
                    Ok(Outcome::Ok)
                }
                Err(error) => check_failed(error),
            }
        }
        MapOp::Extract => {
            refuse(i.is_none(), "i", "map extract")?;
            refuse(j.is_none(), "j", "map extract")?;
            refuse(k.is_none(), "k", "map extract")?;
            refuse(alpha.is_none(), "alpha", "map extract")?;
            refuse(beta.is_none(), "beta", "map extract")?;
            refuse(gamma.is_none(), "gamma", "map extract")?;
            refuse(!trace, "trace", "map extract")?;
            let lambda_text = lambda.ok_or("--lambda is required for map extract")?;
            let lambda: Overpartition = parse_arg(&lambda_text)?;
            let (alpha, beta) = js_extract(&lambda);
            println!("alpha: {alpha}");
            println!("beta: {beta}");
            Ok(Outcome::Ok)
        }
        MapOp::PhiBar => {
            refuse(alpha.is_none(), "alpha", "map phi-bar")?;
            refuse(lambda.is_none(), "lambda", "map phi-bar")?;
            let ctx = context(i, j, k, "map phi-bar")?;
            let gamma_text = gamma.ok_or("--gamma is required for map phi-bar")?;
            let beta_text = beta.ok_or("--beta is required for map phi-bar")?;
            let gamma: DistinctPartition = parse_arg(&gamma_text)?;
            let beta: Partition = parse_arg(&beta_text)?;
            match phi_bar_traced(&gamma, &beta, ctx) {
                Ok(result) => {
                    print_trace(&result, trace);
                    Ok(Outcome::Ok)
                }
                Err(error) => check_failed(error),
            }
        }
        MapOp::PhiBarInv => {
            refuse(alpha.is_none(), "alpha", "map phi-bar-inv")?;
            refuse(beta.is_none(), "beta", "map phi-bar-inv")?;
            refuse(gamma.is_none(), "gamma", "map phi-bar-inv")?;
            refuse(!trace, "trace", "map phi-bar-inv")?;
            let ctx = context(i, j, k, "map phi-bar-inv")?;
            let lambda_text = lambda.ok_or("--lambda is required for map phi-bar-inv")?;
            let lambda: Overpartition = parse_arg(&lambda_text)?;
            match phi_bar_inv(&lambda, ctx) {
                Ok((gamma, beta)) => {
                    println!("gamma: {gamma}");
                    println!("beta: {beta}");
                    Ok(Outcome::Ok)
                }
                Err(error) => check_failed(error),
            }
        }
        MapOp::Psi => {
            refuse(k.is_none(), "k", "map psi")?;
            refuse(alpha.is_none(), "alpha", "map psi")?;
            refuse(beta.is_none(), "beta", "map psi")?;
            refuse(gamma.is_none(), "gamma", "map psi")?;
            refuse(!trace, "trace", "map psi")?;
            let i = need(i, "i", "map psi")?;
            let j = need(j, "j", "map psi")?;
            let lambda_text = lambda.ok_or("--lambda is required for map psi")?;
            let lambda: Overpartition = parse_arg(&lambda_text)?;
            let class = match classify(&lambda, i, j) {
                Ok(class) => class,
                Err(error) => return check_failed(error),
            };
            let image = psi(&lambda, i, j).map_err(|error| error.to_string())?;
            let f = f_statistic(&lambda, i, j).map_err(|error| error.to_string())?;
            let f_image = f_statistic(&image, i, j).map_err(|error| error.to_string())?;
            println!("{class} -> {image}");
            println!("f(lambda) = {f}");
            println!("f(psi(lambda)) = {f_image}");
            Ok(Outcome::Ok)
        }
    }
}

fn context(i: Option<u64>, j: Option<u64>, k: Option<u64>, what: &str) -> Result<OContext, String> {
    let i = need(i, "i", what)?;
    let j = need(j, "j", what)?;
    let k = need(k, "k", what)?;
    OContext::new(i, j, k).map_err(|error| error.to_string())
}

fn run_render(lambda: &str, i: u64, j: Option<u64>, unicode: bool) -> Result<Outcome, String> {
    let lambda: Overpartition = parse_arg(lambda)?;
    let glyphs = if unicode {
        Glyphs::unicode()
    } else {
        Glyphs::ascii()
    };
    let diagram = render(&lambda, i, j, glyphs).map_err(|error| error.to_string())?;
    if !diagram.is_empty() {
        println!("{diagram}");
    }
    Ok(Outcome::Ok)
}
