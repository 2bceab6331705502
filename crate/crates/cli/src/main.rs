//! Exit codes: 0 success, 1 usage error, 2 computation error, 3 verification
//! failure.

mod config;
mod output;
mod run;

use std::io::Write;
use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::Parser;

use crate::run::{CliError, Outcome};

fn main() -> ExitCode {
    let cli = match config::Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            // --help and --version are successful exits, not usage errors.
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 1,
            };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };

    let out = match run::execute(cli) {
        Ok(out) => out,
        Err(CliError::Usage(msg)) => {
            eprintln!("error: {msg}");
            return ExitCode::from(1);
        }
        Err(CliError::Lib(e)) => {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
        Err(CliError::Io(msg)) => {
            eprintln!("error: {msg}");
            return ExitCode::from(2);
        }
    };

    let write_result = match &out.dest {
        Some(path) => std::fs::write(path, out.text.as_bytes())
            .map_err(|e| format!("cannot write {}: {e}", path.display())),
        None => {
            let mut stdout = std::io::stdout().lock();
            stdout
                .write_all(out.text.as_bytes())
                .and_then(|_| stdout.flush())
                .map_err(|e| format!("cannot write standard output: {e}"))
        }
    };
    if let Err(msg) = write_result {
        eprintln!("error: {msg}");
        return ExitCode::from(2);
    }

    match out.outcome {
        Outcome::Success => ExitCode::SUCCESS,
        Outcome::VerifyFailed => ExitCode::from(3),
    }
}
