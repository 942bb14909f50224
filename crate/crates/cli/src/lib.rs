//! Library side of the `amoeba` command: argument types, instance loading,
//! subcommands and the JSON documents they emit.

pub mod args;
pub mod commands;
pub mod document;
pub mod exit;
pub mod instance;

use args::{Cli, Command};
use exit::CliError;

fn configure_threads() -> Result<(), CliError> {
    let Ok(value) = std::env::var("AMOEBA_THREADS") else {
        return Ok(());
    };
    let threads: usize = value
        .trim()
        .parse()
        .ok()
        .filter(|&t| t > 0)
        .ok_or_else(|| {
            CliError::parse(format!(
                "AMOEBA_THREADS must be a positive integer, got {value:?}"
            ))
        })?;
    rayon::ThreadPoolBuilder::new()
        .num_threads(threads)
        .build_global()
        .map_err(|e| CliError::internal(e.to_string()))
}

/// Runs one parsed invocation; returns the JSON document and whether all checks passed.
pub fn run(cli: Cli) -> Result<commands::Output, CliError> {
    configure_threads()?;
    match cli.command {
        Command::Dim(a) => commands::dim(&a),
        Command::Rank(a) => commands::rank(&a),
        Command::Verify(a) => commands::verify(&a),
        Command::Selftest(a) => commands::selftest(&a),
    }
}
