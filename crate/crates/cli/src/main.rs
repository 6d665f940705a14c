mod args;
mod commands;
mod output;

use std::process::ExitCode;

use clap::Parser;

use args::{Cli, Command};

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match &cli.command {
        Command::VerifyStructure(a) => commands::verify_structure(a, cli.format),
        Command::VerifyTheorem(a) => commands::verify_theorem(a, cli.format),
        Command::ExportGenerators(a) => commands::export_generators(a),
        Command::Oracle(a) => commands::oracle(a, cli.format),
    };
    match outcome {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}
