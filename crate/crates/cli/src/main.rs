use std::path::PathBuf;
use std::process::ExitCode;
use std::time::{SystemTime, UNIX_EPOCH};

use anyhow::{Context, Result};
use clap::{Args, Parser, Subcommand};
use serde::Serialize;
use serde_json::Value;

mod commands;

const DEFAULT_SEED: u64 = 20240601;

#[derive(Parser)]
#[command(
    name = "okubo",
    version,
    about = "Exact verification reports for the split Okubo algebra"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone, Debug)]
pub struct Common {
    /// Base field: gf(p), gf(q), gf(p^k), gf(p^k;<modulus>), q or q(w)
    #[arg(long, default_value = "gf(3)")]
    pub field: String,
    #[arg(long, default_value_t = DEFAULT_SEED)]
    pub seed: u64,
    /// Random trials for identity checks
    #[arg(long, default_value_t = 200)]
    pub trials: usize,
    /// Also write the report to this file
    #[arg(long)]
    pub json: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Command {
    /// Symmetric composition identities, grading and commutative center
    Verify(Common),
    /// Compare the multiplication table with the matrix or polynomial model
    Models(Common),
    /// Derivation algebra, derived subalgebra, Killing form and simplicity
    Derivations(Common),
    /// Exhaustive idempotent census with classification
    Census {
        #[command(flatten)]
        common: Common,
        /// Additional census over a field of characteristic not 3 using the matrix model
        #[arg(long)]
        full_field: Option<String>,
    },
    /// Order-3 automorphism and twisted unital algebra of an idempotent
    Twist {
        #[command(flatten)]
        common: Common,
        /// Comma-separated coordinates; defaults to the all-ones idempotent in characteristic 3
        #[arg(long)]
        idempotent: Option<String>,
    },
    /// Write the structure constants as JSON
    Export {
        #[command(flatten)]
        common: Common,
        path: PathBuf,
        /// Also write the multiplication table as CSV
        #[arg(long)]
        csv: Option<PathBuf>,
    },
}

#[derive(Serialize)]
struct RunReport {
    command: &'static str,
    field: String,
    seed: u64,
    trials: usize,
    timestamp: u64,
    results: Value,
    passed: bool,
}

fn run(cli: Cli) -> Result<bool> {
    let (name, common, outcome) = match cli.command {
        Command::Verify(c) => ("verify", c.clone(), commands::verify(&c)?),
        Command::Models(c) => ("models", c.clone(), commands::models(&c)?),
        Command::Derivations(c) => ("derivations", c.clone(), commands::derivations(&c)?),
        Command::Census { common, full_field } => (
            "census",
            common.clone(),
            commands::census(&common, full_field.as_deref())?,
        ),
        Command::Twist { common, idempotent } => (
            "twist",
            common.clone(),
            commands::twist(&common, idempotent.as_deref())?,
        ),
        Command::Export { common, path, csv } => (
            "export",
            common.clone(),
            commands::export(&common, &path, csv.as_deref())?,
        ),
    };
    let report = RunReport {
        command: name,
        field: outcome.field,
        seed: common.seed,
        trials: common.trials,
        timestamp: SystemTime::now()
            .duration_since(UNIX_EPOCH)
            .map(|d| d.as_secs())
            .unwrap_or(0),
        results: outcome.results,
        passed: outcome.passed,
    };
    let text = serde_json::to_string_pretty(&report)?;
    println!("{text}");
    if let Some(path) = &common.json {
        std::fs::write(path, format!("{text}\n")).with_context(|| format!("writing {}", path.display()))?;
    }
    Ok(report.passed)
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::FAILURE,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
