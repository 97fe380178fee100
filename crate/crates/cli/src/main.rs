//! `homoggb`: Groebner bases through homogenization, from the command line.
//!
//! Reads one polynomial per line from stdin and writes canonical results to
//! stdout. Exit status: 0 on success, 1 when a mathematical check fails,
//! 2 on usage or parse errors.

mod commands;
mod config;
mod output;

use std::io::{Read, Write};
use std::process::ExitCode;

use clap::Parser;

use crate::config::Cli;
use crate::output::Failure;

fn main() -> ExitCode {
    let cli = Cli::parse();
    let mut input = String::new();
    if let Err(e) = std::io::stdin().read_to_string(&mut input) {
        eprintln!("error: cannot read stdin: {e}");
        return ExitCode::from(2);
    }
    match commands::run(&cli, &input) {
        Ok(out) => {
            let mut stdout = std::io::stdout().lock();
            if stdout.write_all(out.render(cli.opts.format).as_bytes()).is_err() {
                return ExitCode::from(2);
            }
            ExitCode::from(if out.failed { 1 } else { 0 })
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Math(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
    }
}
