//! `toader`: evaluate elliptic integrals and means, tabulate envelopes of
//! `E(r)`, run the invariant suites and recover the sharp thresholds.
//!
//! Exit codes: 0 success, 1 domain error or failed verification, 2 usage
//! error.

use std::process::ExitCode;

use clap::Parser;

mod args;
mod commands;
mod format;

use args::{Cli, Command};

/// Failure modes mapped onto the exit-code contract.
#[derive(Debug)]
pub enum CliError {
    /// Malformed or inconsistent flags.
    Usage(String),
    /// Domain errors from the library.
    Domain(toader_bounds::Error),
    /// A suite or check ran and failed; the report has been printed.
    Failed,
}

impl From<toader_bounds::Error> for CliError {
    fn from(e: toader_bounds::Error) -> Self {
        CliError::Domain(e)
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let mut out = std::io::stdout().lock();
    let result = match cli.command {
        Command::Eval(a) => commands::eval(&a, &mut out),
        Command::Table(a) => commands::table(&a, &mut out),
        Command::Verify(a) => commands::verify(&a, &mut out),
        Command::Sharpness(a) => commands::sharpness(&a, &mut out),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(CliError::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(CliError::Domain(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
        Err(CliError::Failed) => ExitCode::from(1),
    }
}
