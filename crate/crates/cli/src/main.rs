use std::process::ExitCode;

use clap::Parser;
use newton_cond::commands::{execute, Cli};

fn main() -> ExitCode {
    let cli = Cli::parse();
    match execute(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("newton-cond: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
