//! Command-line front end: argument parsing, dispatch, and exit codes.
//!
//! Exit codes: 0 success, 2 input error, 3 enumeration budget exceeded,
//! 1 internal invariant violation.

pub mod commands;
pub mod input;
pub mod report;

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use milnor::curve::BivariatePolynomial;
use milnor::pham::{Enumeration, DEFAULT_BUDGET};
use milnor::plumbing::PlumbingGraph;
use milnor::Error;

use commands::{Family, Meet};
use report::Report;

#[derive(Debug, Parser)]
#[command(
    name = "milnor",
    version,
    about = "Invariants of links of isolated hypersurface singularities"
)]
pub struct Cli {
    #[command(flatten)]
    pub global: GlobalOpts,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct GlobalOpts {
    /// Emit one JSON document.
    #[arg(long, global = true, conflicts_with = "plain")]
    pub json: bool,
    /// Emit `key: value` lines (default).
    #[arg(long, global = true)]
    pub plain: bool,
    /// Largest Milnor number that may be enumerated.
    #[arg(long, global = true, env = "MILNOR_BUDGET", default_value_t = DEFAULT_BUDGET)]
    pub budget: u64,
    /// Threads for direct enumeration; results do not depend on it.
    #[arg(long, global = true, env = "MILNOR_WORKERS")]
    pub workers: Option<usize>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Brieskorn-Pham link of x_0^a_0 + ... + x_n^a_n.
    Link {
        exponents: Vec<u64>,
        /// Print the characteristic polynomial and spectrum only up to this size.
        #[arg(long, default_value_t = commands::DEFAULT_MAX_DEGREE)]
        max_degree: usize,
    },
    /// Rows of a named family: bp8, kervaire or casson.
    Table {
        family: String,
        #[arg(long)]
        from: Option<u64>,
        #[arg(long)]
        to: Option<u64>,
        /// Number of squared variables in the kervaire family (odd).
        #[arg(long, default_value_t = 3)]
        n: usize,
    },
    /// Plane-curve branch y = sum c x^e: characteristic pairs, cabling, Alexander polynomial.
    Curve {
        /// Terms `e:c,...`, e.g. `3/2:1,7/4:1`.
        #[arg(long, conflicts_with = "file", allow_hyphen_values = true)]
        terms: Option<String>,
        /// File of `en ed cn cd` quadruples, one term per line.
        #[arg(long)]
        file: Option<PathBuf>,
        /// Declared parametrization x = t^m.
        #[arg(long)]
        multiplicity: Option<u64>,
        /// Implicit curve f(x,y) to intersect with, e.g. `y^2 - x^3`.
        #[arg(long, conflicts_with = "meet_terms", allow_hyphen_values = true)]
        meet: Option<String>,
        /// Second branch, in the `--terms` format, to intersect with.
        #[arg(long, allow_hyphen_values = true)]
        meet_terms: Option<String>,
    },
    /// Plumbing graph: a named graph (E8, A<k>) or a graph file.
    Plumb { graph: String },
}

/// Result of one invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub stdout: String,
    pub stderr: String,
    pub code: i32,
}

pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::BudgetExceeded { .. } => 3,
        Error::Internal(_) => 1,
        Error::InvalidInput(_)
        | Error::Precondition(_)
        | Error::Truncation(_)
        | Error::SameBranch
        | Error::Unsupported(_) => 2,
    }
}

fn read_file(path: &PathBuf) -> milnor::Result<String> {
    std::fs::read_to_string(path)
        .map_err(|e| Error::InvalidInput(format!("cannot read {}: {e}", path.display())))
}

fn execute(cli: &Cli) -> milnor::Result<Report> {
    let mut cfg = Enumeration::default().with_budget(cli.global.budget);
    if let Some(w) = cli.global.workers {
        cfg = cfg.with_workers(w);
    }
    match &cli.command {
        Command::Link {
            exponents,
            max_degree,
        } => commands::link(exponents, &cfg, *max_degree),
        Command::Table {
            family,
            from,
            to,
            n,
        } => {
            let family: Family = family.parse()?;
            let (lo, hi) = family.default_range();
            commands::table(family, from.unwrap_or(lo), to.unwrap_or(hi), *n, &cfg)
        }
        Command::Curve {
            terms,
            file,
            multiplicity,
            meet,
            meet_terms,
        } => {
            let parsed = match (terms, file) {
                (Some(t), _) => input::parse_inline_terms(t)?,
                (None, Some(path)) => input::parse_quadruples(&read_file(path)?)?,
                (None, None) => {
                    return Err(Error::InvalidInput(
                        "give a branch with --terms or --file".into(),
                    ))
                }
            };
            let branch = input::branch(parsed, *multiplicity)?;
            let meet = match (meet, meet_terms) {
                (Some(f), _) => Some(Meet::Implicit(f.parse::<BivariatePolynomial>()?)),
                (None, Some(t)) => Some(Meet::Branch(input::branch(
                    input::parse_inline_terms(t)?,
                    None,
                )?)),
                (None, None) => None,
            };
            commands::curve(&branch, meet.as_ref())
        }
        Command::Plumb { graph } => {
            let g = match PlumbingGraph::named(graph) {
                Some(g) => g,
                None => {
                    let path = PathBuf::from(graph);
                    if !path.exists() {
                        return Err(Error::InvalidInput(format!(
                            "`{graph}` is neither a named graph (E8, A<k>) nor a readable file"
                        )));
                    }
                    read_file(&path)?.parse()?
                }
            };
            commands::plumb(graph, &g)
        }
    }
}

fn command_name(c: &Command) -> &'static str {
    match c {
        Command::Link { .. } => "link",
        Command::Table { .. } => "table",
        Command::Curve { .. } => "curve",
        Command::Plumb { .. } => "plumb",
    }
}

/// Runs one invocation; `args` includes the program name.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                Outcome {
                    stdout: String::new(),
                    stderr: text,
                    code: 2,
                }
            } else {
                Outcome {
                    stdout: text,
                    stderr: String::new(),
                    code: 0,
                }
            };
        }
    };
    let json = cli.global.json;
    let (report, code, stderr) = match execute(&cli) {
        Ok(r) => (r, 0, String::new()),
        Err(e) => {
            let code = exit_code(&e);
            let msg = e.to_string();
            (
                Report::failed(command_name(&cli.command), code, msg.clone()),
                code,
                format!("error: {msg}\n"),
            )
        }
    };
    let stdout = if json {
        report.to_json() + "\n"
    } else if code == 0 {
        report.to_plain()
    } else {
        String::new()
    };
    Outcome {
        stdout,
        stderr,
        code,
    }
}
