use std::fs::File;
use std::io::{self, BufWriter};
use std::process::ExitCode;

use bergman_dirichlet::cli::args::Cli;
use bergman_dirichlet::cli::{run, CliError, RunConfig};
use clap::error::ErrorKind;
use clap::Parser;

fn execute(config: &RunConfig) -> Result<bool, CliError> {
    let report = run(config)?;
    match &config.output {
        Some(path) => report.write(config.format, BufWriter::new(File::create(path)?))?,
        None => report.write(config.format, io::stdout().lock())?,
    }
    Ok(report.passed)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => ExitCode::SUCCESS,
                _ => ExitCode::from(1),
            };
        }
    };
    let result = cli.into_config().and_then(|config| execute(&config));
    match result {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => {
            eprintln!("bdspace: one or more checks failed");
            ExitCode::from(2)
        }
        Err(e) => {
            eprintln!("bdspace: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
