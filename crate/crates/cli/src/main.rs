mod args;
mod commands;
mod report;
mod wire;

use std::io::Write;
use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::Parser;

use args::{Cli, Command};
use commands::{EXIT_OK, EXIT_USAGE};

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(err) => {
            let _ = err.print();
            return match err.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => ExitCode::from(EXIT_OK),
                _ => ExitCode::from(EXIT_USAGE),
            };
        }
    };
    let outcome = match &cli.command {
        Command::Mull(args) => commands::mull(args),
        Command::VerifyConjecture(args) => commands::verify_conjecture(args),
        Command::CrossValidate(args) => commands::cross_validate(args),
        Command::Psi(args) => commands::psi(args),
        Command::CrystalExport(args) => commands::crystal_export(args),
    };
    match outcome {
        Ok(output) => {
            // A closed pipe (e.g. `| head`) is not an error worth reporting.
            let _ = writeln!(std::io::stdout().lock(), "{}", output.stdout);
            ExitCode::from(output.code)
        }
        Err(message) => {
            eprintln!("error: {message}");
            ExitCode::from(EXIT_USAGE)
        }
    }
}
