//! `cobord`: normalize terms, compute traces and theta values, evaluate into
//! rational matrices, query generation and run the property suites.
//!
//! Exit codes: 0 success, 1 user error (syntax, type, file), 2 suite failure.

use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use cobord::check::{self, CheckConfig, Suite};
use cobord::smc::{dualizable_from_matrix, evaluate, parse_matrix_file, MatrixBackend};
use cobord::term::normalize;
use cobord::trace::{classify_scalar, find_generating_witness, theta_of_endomorphism, Generation, ThetaSpec};
use cobord::ScalarMultiset;

#[derive(Parser, Debug)]
#[command(name = "cobord", version, about = "Exact computations with integer-labelled 1-dimensional bordisms")]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Structured,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Print the normal form (canonical bordism) of a term.
    Normalize {
        #[arg(long)]
        term: String,
    },
    /// Theta of the endomorphism a term denotes, as a multiset of labels.
    Trace {
        #[arg(long)]
        term: String,
        /// Exponents, e.g. `theta[3,0,-2]`.
        #[arg(long, allow_hyphen_values = true)]
        theta: String,
    },
    /// Evaluate a term in rational matrices at the automorphism in a file.
    Eval {
        #[arg(long)]
        term: String,
        /// JSON file `{"dim": n, "entries": [["p/q", ...], ...]}`.
        #[arg(long)]
        matrix: PathBuf,
    },
    /// Run a property suite.
    Check {
        #[arg(value_parser = parse_suite)]
        suite: Suite,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 100, value_parser = clap::value_parser!(u64).range(1..))]
        cases: u64,
        #[arg(long, default_value_t = 4, value_parser = clap::value_parser!(u64).range(1..))]
        bound: u64,
    },
    /// Classify a closed term, or search for a point realising a target
    /// under a theta transformation.
    Classify {
        /// A closed term to classify.
        #[arg(long, conflicts_with_all = ["theta", "target"])]
        term: Option<String>,
        #[arg(long, allow_hyphen_values = true, requires = "target")]
        theta: Option<String>,
        /// Target multiset, e.g. `{2,-5,0}`.
        #[arg(long, allow_hyphen_values = true, requires = "theta")]
        target: Option<String>,
        #[arg(long, default_value_t = 5, value_parser = clap::value_parser!(u64).range(1..))]
        bound: u64,
    },
}

fn parse_suite(s: &str) -> Result<Suite, String> {
    s.parse()
}

enum Outcome {
    Ok,
    SuiteFailed,
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { ExitCode::from(1) } else { ExitCode::SUCCESS };
        }
    };
    match run(&cli) {
        Ok(Outcome::Ok) => ExitCode::SUCCESS,
        Ok(Outcome::SuiteFailed) => ExitCode::from(2),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
    }
}

fn emit(format: Format, text: impl std::fmt::Display, structured: serde_json::Value) {
    match format {
        Format::Text => println!("{text}"),
        Format::Structured => println!("{structured}"),
    }
}

fn multiset_json(m: &ScalarMultiset) -> serde_json::Value {
    json!(m.iter().map(ToString::to_string).collect::<Vec<_>>())
}

fn parse_theta(s: &str) -> Result<ThetaSpec> {
    s.parse().with_context(|| format!("invalid theta spec `{s}`"))
}

fn run(cli: &Cli) -> Result<Outcome> {
    let format = cli.format;
    match &cli.command {
        Command::Normalize { term } => {
            let b = normalize(term)?;
            emit(format, &b, b.to_json());
        }
        Command::Trace { term, theta } => {
            let spec = parse_theta(theta)?;
            let b = normalize(term)?;
            let m = theta_of_endomorphism(&b, &spec)?;
            emit(format, &m, json!({ "theta": spec.to_string(), "circles": multiset_json(&m) }));
        }
        Command::Eval { term, matrix } => {
            let text = std::fs::read_to_string(matrix)
                .with_context(|| format!("cannot read {}", matrix.display()))?;
            let a = parse_matrix_file(&text).with_context(|| matrix.display().to_string())?;
            let pair = dualizable_from_matrix(&a)?;
            let b = normalize(term)?;
            let m = evaluate(&b, &pair, &MatrixBackend)?;
            emit(format, &m, m.to_json());
        }
        Command::Check {
            suite,
            seed,
            cases,
            bound,
        } => {
            let config = CheckConfig {
                seed: *seed,
                cases: *cases as usize,
                bound: *bound as usize,
            };
            let report = check::run(*suite, &config);
            emit(format, &report, report.to_json());
            if !report.passed() {
                return Ok(Outcome::SuiteFailed);
            }
        }
        Command::Classify {
            term,
            theta,
            target,
            bound,
        } => match (term, theta, target) {
            (Some(term), _, _) => {
                let b = normalize(term)?;
                let m = classify_scalar(&b)?;
                emit(format, &m, json!({ "circles": multiset_json(&m) }));
            }
            (None, Some(theta), Some(target)) => {
                let spec = parse_theta(theta)?;
                let target: ScalarMultiset = target
                    .parse()
                    .with_context(|| format!("invalid target `{target}`"))?;
                let result = find_generating_witness(&spec, &target, *bound as usize);
                let (text, value) = match &result {
                    Generation::Witness(p) => (
                        format!("witness {p}"),
                        json!({ "result": "witness", "point": p.auto().to_json() }),
                    ),
                    Generation::Obstructed(o) => (
                        format!("none ({o})"),
                        json!({ "result": "none", "obstruction": o.name(), "reason": o.to_string() }),
                    ),
                    Generation::NotFound { bound } => (
                        format!("none (not found within bound {bound})"),
                        json!({ "result": "none", "obstruction": null, "bound": bound }),
                    ),
                };
                emit(format, text, value);
            }
            _ => bail!("classify needs --term, or both --theta and --target"),
        },
    }
    Ok(Outcome::Ok)
}
