//! Command-line front end: every command prints one JSON document on stdout.
//!
//! Exit codes: 0 success, 1 failed verification, 2 malformed or invalid
//! input, 3 a nilpotent representative failed validation.

mod args;
mod commands;
mod error;

use std::io::Write;
use std::process::ExitCode;

use clap::Parser;
use serde_json::json;

fn main() -> ExitCode {
    let cli = args::Cli::parse();
    let (json, code) = match commands::run(&cli) {
        Ok(outcome) => (outcome.json, outcome.code),
        Err(err) => {
            eprintln!("error: {err}");
            (json!({ "error": err.to_string(), "exit_code": err.exit_code() }), err.exit_code())
        }
    };
    let mut stdout = std::io::stdout().lock();
    let _ = writeln!(stdout, "{}", commands::render(&cli, &json));
    ExitCode::from(code as u8)
}
