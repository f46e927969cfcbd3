//! `mu-bargmann`: verification reports, tables and sweeps as CSV or JSON.

mod args;
mod commands;
mod output;
mod pool;

use std::process::ExitCode;

use clap::Parser;

use args::{Cli, Command};
use commands::Failure;

fn dispatch(command: &Command) -> Result<(), Failure> {
    match command {
        Command::Verify(a) => commands::verify::run(a),
        Command::Table(a) => commands::table::run(a),
        Command::Sharpness(a) => commands::sharpness::run(a),
        Command::Limits(a) => commands::limits::run(a),
        Command::TransformCheck(a) => commands::transform_check::run(a),
        Command::Selftest(a) => commands::selftest::run(a),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let pool = match pool::build() {
        Ok(p) => p,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    };
    match pool.install(|| dispatch(&cli.command)) {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("error: {f}");
            ExitCode::from(f.exit_code() as u8)
        }
    }
}
