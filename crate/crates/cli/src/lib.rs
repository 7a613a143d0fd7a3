//! Command-line front end for `giantval-core`.
//!
//! Exit codes: 0 on success (as-printed violations included), 1 when a
//! proved-sound bound is violated or two internal routes disagree, 2 on usage
//! and resource errors.

pub mod args;
pub mod commands;
pub mod error;
pub mod report;

use std::ffi::OsString;
use std::io::Write;

use clap::Parser;
use rayon::{ThreadPool, ThreadPoolBuilder};

use crate::args::{Cli, Command};
pub use crate::error::{CliError, CliResult};

fn dispatch(
    cli: &Cli,
    pool: &ThreadPool,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> CliResult<u8> {
    match &cli.command {
        Command::Val(a) => commands::val(a, out),
        Command::Bounds(a) => commands::bounds(a, out),
        Command::Audit(a) => commands::audit(a, pool, out, err),
        Command::BerezinDigits(a) => commands::berezin_digits(a, out),
        Command::Oracle(a) => commands::oracle(a, pool, out),
    }
}

/// Parses `args` and runs the subcommand; returns the process exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> u8
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            if e.use_stderr() {
                let _ = write!(err, "{}", e.render());
                return 2;
            }
            let _ = write!(out, "{}", e.render());
            return 0;
        }
    };
    let pool = match ThreadPoolBuilder::new()
        .num_threads(cli.threads.unwrap_or(0))
        .build()
    {
        Ok(pool) => pool,
        Err(e) => {
            let _ = writeln!(err, "error: thread pool: {e}");
            return 2;
        }
    };
    match dispatch(&cli, &pool, out, err) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            e.exit_code()
        }
    }
}
