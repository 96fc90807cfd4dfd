//! `slackmat` command-line front end.

mod commands;
mod input;
mod suite;

use std::process::ExitCode;
use std::time::Duration;

use clap::{Args, Parser, Subcommand, ValueEnum};
use slackmat::certify::Limits;
use slackmat::groebner::{Budget, GbOptions};
use slackmat::slack::{CycleSet, MinorStrategy};
use slackmat::FieldSpec;

/// Exit code for malformed input (BSD `EX_USAGE`).
pub const EXIT_USAGE: u8 = 64;
pub const EXIT_UNKNOWN: u8 = 2;

#[derive(Parser, Debug)]
#[command(name = "slackmat", version, about = "Slack matrices, slack ideals and realizability certificates for matroids")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    /// Print JSON instead of text.
    #[arg(long, global = true)]
    pub json: bool,
    /// Log progress to stderr (-v info, -vv debug).
    #[arg(short, long, action = clap::ArgAction::Count, global = true)]
    pub verbose: u8,
}

#[derive(Args, Debug, Clone)]
pub struct Budgets {
    /// Seconds per computation (per strategy for `certify`).
    #[arg(long, env = "SLACKMAT_TIMEOUT")]
    pub timeout: Option<f64>,
    /// Cap on processed S-pairs per Gröbner computation.
    #[arg(long, env = "SLACKMAT_MAX_PAIRS")]
    pub max_pairs: Option<u64>,
}

impl Budgets {
    pub fn is_set(&self) -> bool {
        self.timeout.is_some() || self.max_pairs.is_some()
    }

    pub fn limits(&self) -> Limits {
        Limits { timeout: self.timeout.map(Duration::from_secs_f64), max_pairs: self.max_pairs }
    }

    pub fn gb(&self) -> GbOptions {
        let mut b = Budget::unlimited();
        if let Some(t) = self.timeout {
            b = b.with_timeout(Duration::from_secs_f64(t));
        }
        if let Some(n) = self.max_pairs {
            b = b.with_max_pairs(n);
        }
        GbOptions::with_budget(b)
    }
}

#[derive(Args, Debug, Clone)]
pub struct FieldArg {
    /// Coefficient field: Q or GF(p).
    #[arg(long, default_value = "Q", value_parser = parse_field)]
    pub field: FieldSpec,
}

fn parse_field(s: &str) -> Result<FieldSpec, String> {
    s.parse().map_err(|e| format!("{e}"))
}

#[derive(Args, Debug, Clone)]
pub struct ScalingArgs {
    /// Fix a spanning forest of slack entries to one (default).
    #[arg(long, overrides_with = "no_scaled")]
    pub scaled: bool,
    /// Use the full slack ideal.
    #[arg(long = "no-scaled")]
    pub no_scaled: bool,
    /// JSON list of [element label, 1-based column] pairs to fix to one;
    /// defaults to the input's "forest" key, then a spanning forest.
    #[arg(long)]
    pub forest: Option<String>,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum MinorsArg {
    All,
    Bordered,
}

impl From<MinorsArg> for MinorStrategy {
    fn from(m: MinorsArg) -> Self {
        match m {
            MinorsArg::All => MinorStrategy::All,
            MinorsArg::Bordered => MinorStrategy::Bordered,
        }
    }
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum CyclesArg {
    Simple,
    Chordless,
    Fundamental,
}

impl From<CyclesArg> for CycleSet {
    fn from(c: CyclesArg) -> Self {
        match c {
            CyclesArg::Simple => CycleSet::Simple,
            CyclesArg::Chordless => CycleSet::Chordless,
            CyclesArg::Fundamental => CycleSet::Fundamental,
        }
    }
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// List the hyperplanes (slack matrix columns).
    Hyperplanes { input: String },
    /// The symbolic slack matrix, or the numeric one of the input's realization.
    SlackMatrix {
        input: String,
        /// Print the symbolic matrix even when a realization is given.
        #[arg(long)]
        symbolic: bool,
    },
    /// Generators, dimension and degree of the (scaled) slack ideal.
    SlackIdeal {
        input: String,
        #[command(flatten)]
        field: FieldArg,
        #[command(flatten)]
        scaling: ScalingArgs,
        #[arg(long, value_enum, default_value = "bordered")]
        minors: MinorsArg,
        #[command(flatten)]
        budgets: Budgets,
    },
    /// Decide realizability and print a certificate (exit 0 realizable,
    /// 1 non-realizable, 2 unknown).
    Certify {
        input: String,
        #[command(flatten)]
        field: FieldArg,
        /// Comma-separated strategies: submatrices, full-product,
        /// scaled-unit, oracle.
        #[arg(long)]
        strategy: Option<String>,
        /// 1-based columns of a submatrix to test, comma-separated;
        /// repeat for several submatrices.
        #[arg(long)]
        columns: Vec<String>,
        #[command(flatten)]
        scaling: ScalingArgs,
        #[command(flatten)]
        budgets: Budgets,
    },
    /// Search column submatrices for a monomial in the minor ideal.
    FinalPoly {
        input: String,
        #[command(flatten)]
        field: FieldArg,
        #[arg(long)]
        columns: Vec<String>,
        /// Number of heuristic subsets to try.
        #[arg(long, default_value_t = 16)]
        max_subsets: usize,
        #[command(flatten)]
        budgets: Budgets,
    },
    /// Cycle binomials of the input's slack matrix.
    CycleIdeal {
        input: String,
        #[command(flatten)]
        field: FieldArg,
        #[arg(long, value_enum, default_value = "simple")]
        cycles: CyclesArg,
        #[arg(long, default_value_t = slackmat::slack::DEFAULT_CYCLE_CAP)]
        cap: usize,
        /// Also compare with the slack ideal by two-way membership.
        #[arg(long)]
        compare: bool,
        #[command(flatten)]
        budgets: Budgets,
    },
    /// Projective uniqueness from the scaled slack ideal.
    Unique {
        input: String,
        #[command(flatten)]
        field: FieldArg,
        #[command(flatten)]
        scaling: ScalingArgs,
        #[command(flatten)]
        budgets: Budgets,
    },
    /// Univariate polynomials in the scaled slack ideal.
    Obstructions {
        input: String,
        #[command(flatten)]
        field: FieldArg,
        #[command(flatten)]
        scaling: ScalingArgs,
        #[command(flatten)]
        budgets: Budgets,
    },
    /// Projections of the universal realization ideal.
    Universal {
        input: String,
        #[command(flatten)]
        field: FieldArg,
        #[arg(long, default_value_t = 40)]
        max_vars: usize,
        #[command(flatten)]
        budgets: Budgets,
    },
    /// Exhaustive realization search over a small prime field.
    Oracle {
        input: String,
        #[arg(long, default_value = "GF(2)", value_parser = parse_field)]
        field: FieldSpec,
        #[arg(long, default_value_t = slackmat::certify::DEFAULT_ORACLE_NODES)]
        max_nodes: u64,
        #[arg(long, env = "SLACKMAT_TIMEOUT")]
        timeout: Option<f64>,
    },
    /// Run the bundled example suite (all of m4, fano, nonfano, vamos, m8,
    /// perles when no names are given).
    Examples { names: Vec<String> },
}

/// Result of a command: what to print and the exit code.
pub struct Report {
    pub json: serde_json::Value,
    pub text: String,
    pub code: u8,
}

#[derive(Debug)]
pub enum CliError {
    Input(String),
    Budget(String),
}

impl From<slackmat::Error> for CliError {
    fn from(e: slackmat::Error) -> Self {
        use slackmat::{Error, GbError};
        match e {
            Error::Gb(GbError::BudgetExhausted { .. } | GbError::Cancelled) => CliError::Budget(e.to_string()),
            other => CliError::Input(other.to_string()),
        }
    }
}

impl From<slackmat::GbError> for CliError {
    fn from(e: slackmat::GbError) -> Self {
        slackmat::Error::from(e).into()
    }
}

impl From<slackmat::AlgebraError> for CliError {
    fn from(e: slackmat::AlgebraError) -> Self {
        CliError::Input(e.to_string())
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let level = match cli.verbose {
        0 => "warn",
        1 => "info",
        _ => "debug",
    };
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or(level)).init();
    match commands::run(&cli.command) {
        Ok(r) => {
            if cli.json {
                println!("{}", serde_json::to_string_pretty(&r.json).expect("serializable"));
            } else {
                print!("{}", r.text);
            }
            ExitCode::from(r.code)
        }
        Err(CliError::Input(msg)) => {
            eprintln!("slackmat: {msg}");
            ExitCode::from(EXIT_USAGE)
        }
        Err(CliError::Budget(msg)) => {
            if cli.json {
                let v = serde_json::json!({ "kind": "unknown", "reason": msg });
                println!("{}", serde_json::to_string_pretty(&v).expect("serializable"));
            } else {
                println!("unknown: {msg}");
            }
            ExitCode::from(EXIT_UNKNOWN)
        }
    }
}
