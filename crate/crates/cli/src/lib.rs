//! Command-line front end for `hypermoment`.
//!
//! Every command prints one JSON document: a report envelope on success or
//! an error object on failure. `--format text` prints the same content as
//! aligned text. Exit codes: 0 success, 1 failed checks, 2 invalid input,
//! 3 valid input outside an operation's preconditions or scope.

mod commands;
pub mod report;
mod text;
mod verify;

use std::path::PathBuf;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};

use hypermoment::enumerate::Caps;
use report::{Failure, Report, EXIT_CHECK_FAILED};

#[derive(Debug, Parser)]
#[command(
    name = "hypermoment",
    version,
    about = "Spectral moments and S-order tools for uniform hypergraphs"
)]
pub struct Cli {
    #[arg(long, value_enum, default_value_t = Format::Json, global = true)]
    pub format: Format,
    /// Enumeration caps as `m=q` pairs, e.g. `2=9,3=7`.
    #[arg(long, env = Caps::ENV_VAR, global = true)]
    pub caps: Option<String>,
    /// Leave the wall time out of the output.
    #[arg(long, global = true)]
    pub no_timing: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Text,
}

#[derive(Debug, Clone, Default, Args)]
pub struct FamilyArgs {
    /// Family name; see each command for the accepted values.
    #[arg(long)]
    pub family: Option<String>,
    #[arg(long)]
    pub m: Option<usize>,
    #[arg(long)]
    pub q: Option<usize>,
    #[arg(long)]
    pub e: Option<usize>,
    #[arg(long)]
    pub f: Option<usize>,
    /// Restrict to members of maximum degree at most 2.
    #[arg(long)]
    pub binary: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    Trees,
    Unicyclic,
    Transforms,
    Oracles,
    All,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ReduceMode {
    StarWard,
    PathWard,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Build a named hypergraph (hyperpath, hyperstar, hypercycle,
    /// pendant-cycle, tailed-cycle, power).
    Gen {
        #[command(flatten)]
        family: FamilyArgs,
        /// 2-uniform input graph for `--family power`.
        #[arg(long)]
        graph: Option<PathBuf>,
        /// Also write the hypergraph to this file.
        #[arg(long, short)]
        output: Option<PathBuf>,
    },
    /// Spectral moments S_0 .. S_dmax.
    Moments {
        input: PathBuf,
        #[arg(long)]
        dmax: Option<usize>,
    },
    /// Counts of 1-, 2- and 3-edge paths and 3-edge stars.
    Census { input: PathBuf },
    /// Zagreb index and degree sequence.
    Zagreb { input: PathBuf },
    /// Compare two hypergraphs in the S-order.
    Compare {
        a: PathBuf,
        b: PathBuf,
        #[arg(long)]
        dmax: Option<usize>,
    },
    /// Sort hypergraph files, or an enumerated family, in the S-order.
    Order {
        inputs: Vec<PathBuf>,
        #[command(flatten)]
        family: FamilyArgs,
        #[arg(long)]
        dmax: Option<usize>,
    },
    /// List a family up to isomorphism (hypertrees, unicyclic).
    Enumerate {
        #[command(flatten)]
        family: FamilyArgs,
    },
    /// Apply a transformation spec, list legal sites, or run a reduction.
    Transform {
        input: PathBuf,
        /// Transformation spec as JSON, or `@path` to read it from a file.
        #[arg(long, conflicts_with_all = ["sites", "reduce"])]
        spec: Option<String>,
        #[arg(long, conflicts_with = "reduce")]
        sites: bool,
        #[arg(long, value_enum)]
        reduce: Option<ReduceMode>,
        #[arg(long, short)]
        output: Option<PathBuf>,
    },
    /// Rerun the ordering, formula and transformation checks.
    Verify {
        #[arg(long, value_enum, default_value_t = Suite::All)]
        suite: Suite,
        #[command(flatten)]
        family: FamilyArgs,
    },
}

impl Command {
    pub fn name(&self) -> &'static str {
        match self {
            Command::Gen { .. } => "gen",
            Command::Moments { .. } => "moments",
            Command::Census { .. } => "census",
            Command::Zagreb { .. } => "zagreb",
            Command::Compare { .. } => "compare",
            Command::Order { .. } => "order",
            Command::Enumerate { .. } => "enumerate",
            Command::Transform { .. } => "transform",
            Command::Verify { .. } => "verify",
        }
    }
}

/// Rendered output and process exit code.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Output {
    pub stdout: String,
    pub code: u8,
}

pub fn caps(cli: &Cli) -> Result<Caps, Failure> {
    match &cli.caps {
        Some(spec) => Ok(Caps::default().with_overrides(spec)?),
        None => Ok(Caps::default()),
    }
}

pub fn execute(cli: &Cli) -> Result<Report, Failure> {
    let caps = caps(cli)?;
    match &cli.command {
        Command::Gen {
            family,
            graph,
            output,
        } => commands::gen(family, graph.as_deref(), output.as_deref()),
        Command::Moments { input, dmax } => commands::moments(input, *dmax),
        Command::Census { input } => commands::census(input),
        Command::Zagreb { input } => commands::zagreb(input),
        Command::Compare { a, b, dmax } => commands::compare(a, b, *dmax),
        Command::Order {
            inputs,
            family,
            dmax,
        } => commands::order(inputs, family, *dmax, &caps),
        Command::Enumerate { family } => commands::enumerate(family, &caps),
        Command::Transform {
            input,
            spec,
            sites,
            reduce,
            output,
        } => commands::transform(input, spec.as_deref(), *sites, *reduce, output.as_deref()),
        Command::Verify { suite, family } => verify::run(*suite, family, &caps),
    }
}

pub fn run(cli: &Cli) -> Output {
    let start = Instant::now();
    let outcome = execute(cli);
    let wall = (!cli.no_timing).then(|| start.elapsed().as_millis());
    match outcome {
        Ok(report) => {
            let code = if report.failed() {
                EXIT_CHECK_FAILED
            } else {
                0
            };
            let stdout = match cli.format {
                Format::Json => {
                    let value = match wall {
                        Some(ms) => report.envelope(ms),
                        None => serde_json::json!({ "report": report.to_json() }),
                    };
                    pretty(&value)
                }
                Format::Text => text::render(&report, wall),
            };
            Output { stdout, code }
        }
        Err(failure) => {
            let stdout = match cli.format {
                Format::Json => pretty(&failure.to_json()),
                Format::Text => text::render_error(&failure),
            };
            Output {
                stdout,
                code: failure.exit_code(),
            }
        }
    }
}

fn pretty(v: &serde_json::Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("JSON values serialize");
    s.push('\n');
    s
}
