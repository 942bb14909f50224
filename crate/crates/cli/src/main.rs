//! `amoeba`: amoeba dimension of linear spaces through the derived matroid.
//!
//! Documents go to stdout as one line of JSON; diagnostics go to stderr.

use std::io::Write;
use std::process::ExitCode;

use amoeba_cli::args::Cli;
use amoeba_cli::exit;
use clap::Parser;

fn main() -> ExitCode {
    match amoeba_cli::run(Cli::parse()) {
        Ok((json, passed)) => {
            if writeln!(std::io::stdout().lock(), "{json}").is_err() {
                return ExitCode::from(exit::INTERNAL);
            }
            if passed {
                ExitCode::SUCCESS
            } else {
                eprintln!("amoeba: verification failed");
                ExitCode::from(exit::VERIFICATION)
            }
        }
        Err(e) => {
            eprintln!("amoeba: {}", e.message);
            ExitCode::from(e.code)
        }
    }
}
