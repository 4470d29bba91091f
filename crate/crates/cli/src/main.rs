mod args;
mod commands;
mod config;
mod error;
mod input;

use std::io::Write;
use std::process::ExitCode;

use clap::Parser;

use crate::args::Cli;
use crate::error::CliError;

fn write_output(cli: &Cli, text: &str) -> Result<(), CliError> {
    match &cli.out {
        Some(path) => std::fs::write(path, text).map_err(|e| CliError::Usage(format!("--out {}: {e}", path.display()))),
        None => std::io::stdout()
            .write_all(text.as_bytes())
            .map_err(|e| CliError::Usage(format!("stdout: {e}"))),
    }
}

fn run(cli: &Cli) -> Result<(), CliError> {
    let settings = config::resolve(cli, std::env::var(config::BUDGET_ENV).ok())?;
    if cli.verbose {
        eprintln!("{}", settings.describe());
    }
    let outcome = commands::run(&cli.command, &settings)?;
    write_output(cli, &outcome.output)?;
    outcome.failure.map_or(Ok(()), Err)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            e.exit_code()
        }
    }
}
