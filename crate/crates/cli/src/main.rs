use std::process::ExitCode;

use clap::Parser;

mod commands;
mod config;
mod output;

fn main() -> ExitCode {
    let cli = config::Cli::parse();
    match commands::run(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(failure) => {
            eprintln!("oddzeta: {}", failure.message);
            ExitCode::from(failure.code)
        }
    }
}
