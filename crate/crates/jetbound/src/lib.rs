//! Command-line front end, result cache and batch runs for `jetbound-core`.

pub mod args;
pub mod cache;
pub mod commands;
pub mod engine;
pub mod error;
pub mod report;
pub mod sweep;

use std::io::Write;

pub use args::Cli;
pub use error::CliError;

/// Runs a parsed command line; errors go to `err`. Returns the exit code.
pub fn run(cli: &Cli, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    match commands::dispatch(&cli.command, out) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "jetbound: {e}");
            e.exit_code()
        }
    }
}
