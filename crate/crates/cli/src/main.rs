//! `qcover`: command-line front end for the Q-index coverability toolkit.
//!
//! Exit codes: 0 success, 1 a verification check failed, 2 malformed input
//! or invalid parameters (also: unknowns present in `verify` unless
//! `--allow-unknown`), 3 an unknown verdict under `pathcover --strict`.

mod commands;
mod input;

use std::process::ExitCode;

use clap::{Parser, Subcommand};

use crate::commands::{ClosureArgs, EnumerateArgs, PathcoverArgs, QindexArgs, VerifyArgs};

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Core(#[from] qcover_core::Error),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

#[derive(Parser, Debug)]
#[command(name = "qcover", version, about = "Signless-Laplacian spectral checks for k-path-coverability")]
struct Cli {
    /// Emit JSON instead of tab-separated text.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Q-index (or adjacency spectral radius) with its residual.
    Qindex(QindexArgs),
    /// Minimum path cover, exactly or by certificate.
    Pathcover(PathcoverArgs),
    /// Degree-sum closure.
    Closure(ClosureArgs),
    /// Isomorph-free enumeration of small graphs as graph6.
    Enumerate(EnumerateArgs),
    /// Run verification checks and write a JSON report.
    Verify(VerifyArgs),
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match &cli.command {
        Command::Qindex(a) => commands::qindex(a, cli.json),
        Command::Pathcover(a) => commands::pathcover(a, cli.json),
        Command::Closure(a) => commands::closure(a, cli.json),
        Command::Enumerate(a) => commands::enumerate(a, cli.json),
        Command::Verify(a) => commands::verify(a, cli.json),
    };
    match result {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("qcover: {e}");
            ExitCode::from(2)
        }
    }
}
