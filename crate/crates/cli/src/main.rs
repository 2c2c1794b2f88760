use std::process::ExitCode;

use btq::config::Cli;
use clap::Parser;

fn main() -> ExitCode {
    ExitCode::from(btq::run(Cli::parse()))
}
