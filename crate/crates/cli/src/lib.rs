//! Command-line front end: subcommands, run configuration and exit codes.

mod commands;
mod output;

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

pub use output::{Document, Status};

/// Exit codes shared by every subcommand.
pub mod exit {
    pub const PASS: i32 = 0;
    pub const FAIL: i32 = 1;
    pub const INVALID: i32 = 2;
    pub const AMBIGUOUS: i32 = 3;
}

pub const DEFAULT_SEED: u64 = 1729;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    Text,
    Structured,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Target {
    S1,
    Ss2,
    Torus,
}

#[derive(Debug, Parser)]
#[command(name = "chernkit", version, about = "Exact and numeric checks for Chern characters, circle operators and K-groups")]
pub struct Cli {
    /// Fourier window half-width for truncated kernel counts.
    #[arg(long, global = true, default_value_t = 128, value_parser = clap::value_parser!(u64).range(16..))]
    pub n_trunc: u64,
    /// Singular values below this count as kernel.
    #[arg(long, global = true, default_value_t = 1e-8)]
    pub svd_tol: f64,
    /// Tolerance for numeric oracle comparisons.
    #[arg(long, global = true, default_value_t = 1e-9)]
    pub oracle_tol: f64,
    #[arg(long, global = true, default_value_t = DEFAULT_SEED)]
    pub seed: u64,
    /// Weight of the trace on the `+∞` circle.
    #[arg(long, global = true, default_value_t = 1.0, allow_negative_numbers = true)]
    pub c1: f64,
    /// Weight of the trace on the `−∞` circle.
    #[arg(long, global = true, default_value_t = 0.0, allow_negative_numbers = true)]
    pub c2: f64,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    /// Replace the projection by a perturbed copy (for testing failure paths).
    #[arg(long, global = true, hide = true)]
    pub mutate_fixture: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Symbolic and numeric checks on the projection p_θ and its character.
    VerifyForms,
    /// Windings, Fredholm index and truncated kernel dimensions of an operator.
    Index {
        /// Shipped operator name (identity, conv_z, heaviside, b, b_conj, b_flip) or a JSON spec file.
        operator: String,
    },
    /// The character matrix under both recipes for column 3.
    Character,
    /// Solves a six-term diagram and prints the K-groups with generators.
    Ktheory {
        #[arg(long, value_enum, required_unless_present = "diagram")]
        target: Option<Target>,
        /// A diagram file instead of a shipped target.
        #[arg(long, conflicts_with = "target")]
        diagram: Option<PathBuf>,
    },
    /// Everything above, with the published values as expectations.
    Report,
}

/// Validated settings shared by the subcommands.
#[derive(Clone, Debug, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct RunConfig {
    pub truncation_n: usize,
    pub svd_tol: f64,
    pub oracle_tol: f64,
    pub seed: u64,
    pub c1: f64,
    pub c2: f64,
    pub output_format: Format,
    #[serde(skip_serializing_if = "std::ops::Not::not")]
    pub mutated_fixture: bool,
}

impl RunConfig {
    fn from_cli(cli: &Cli) -> Result<Self, String> {
        for (flag, v) in [("--svd-tol", cli.svd_tol), ("--oracle-tol", cli.oracle_tol)] {
            if !(v.is_finite() && v > 0.0) {
                return Err(format!("{flag} must be a positive number, got {v}"));
            }
        }
        if !(cli.c1.is_finite() && cli.c2.is_finite()) {
            return Err("--c1 and --c2 must be finite".into());
        }
        Ok(Self {
            truncation_n: cli.n_trunc as usize,
            svd_tol: cli.svd_tol,
            oracle_tol: cli.oracle_tol,
            seed: cli.seed,
            c1: cli.c1,
            c2: cli.c2,
            output_format: cli.format,
            mutated_fixture: cli.mutate_fixture,
        })
    }
}

impl Default for RunConfig {
    fn default() -> Self {
        Self {
            truncation_n: 128,
            svd_tol: 1e-8,
            oracle_tol: 1e-9,
            seed: DEFAULT_SEED,
            c1: 1.0,
            c2: 0.0,
            output_format: Format::Text,
            mutated_fixture: false,
        }
    }
}

/// Parses `args`, runs the subcommand, writes its report to `out` and
/// returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { exit::INVALID } else { exit::PASS };
            let _ = e.print();
            return code;
        }
    };
    let cfg = match RunConfig::from_cli(&cli) {
        Ok(c) => c,
        Err(msg) => {
            eprintln!("error: {msg}");
            return exit::INVALID;
        }
    };
    let doc = execute(&cli.command, &cfg);
    let text = match cfg.output_format {
        Format::Structured => doc.to_json(),
        Format::Text => doc.to_text(),
    };
    if out.write_all(text.as_bytes()).and_then(|_| out.flush()).is_err() {
        return exit::FAIL;
    }
    if let (Some(msg), Format::Structured) = (&doc.error, cfg.output_format) {
        eprintln!("error: {msg}");
    }
    doc.exit_code
}

/// Runs one subcommand into a report document.
pub fn execute(command: &Command, cfg: &RunConfig) -> Document {
    match command {
        Command::VerifyForms => commands::verify_forms(cfg),
        Command::Index { operator } => commands::index(operator, cfg),
        Command::Character => commands::character(cfg),
        Command::Ktheory { target, diagram } => commands::ktheory(*target, diagram.as_deref(), cfg),
        Command::Report => commands::report(cfg),
    }
}
