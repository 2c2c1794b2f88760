//! Library half of the `btq` command-line tool.

pub mod commands;
pub mod config;
pub mod render;

use std::fs;
use std::io::{self, Write};

use config::{Cli, Command, RunConfig};

pub const EXIT_PASS: u8 = 0;
pub const EXIT_MISMATCH: u8 = 1;
pub const EXIT_USAGE: u8 = 2;
pub const EXIT_BUDGET: u8 = 3;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Core(btquot::Error),
    #[error("budget exceeded: {detail}")]
    Budget {
        detail: String,
        partial: Option<String>,
    },
    #[error("cannot write output: {0}")]
    Io(#[from] io::Error),
}

impl From<btquot::Error> for CliError {
    fn from(e: btquot::Error) -> Self {
        match e {
            btquot::Error::BudgetExceeded {
                n,
                m,
                required,
                budget,
            } => CliError::Budget {
                detail: format!(
                    "Upsilon({n}, {m}) needs {required} candidate tuples, budget {budget}"
                ),
                partial: None,
            },
            e => CliError::Core(e),
        }
    }
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Budget { .. } => EXIT_BUDGET,
            _ => EXIT_USAGE,
        }
    }
}

/// Runs one command, writing to `--out` or stdout; returns the exit code.
pub fn run(cli: Cli) -> u8 {
    let (out, result) = dispatch(&cli.command);
    let (text, code) = match result {
        Ok(o) => (Some(o.text), if o.pass { EXIT_PASS } else { EXIT_MISMATCH }),
        Err(e) => {
            eprintln!("btq: {e}");
            let partial = match e {
                CliError::Budget { ref partial, .. } => partial.clone(),
                _ => None,
            };
            (partial, e.exit_code())
        }
    };
    if let Some(text) = text {
        if let Err(e) = emit(out.as_deref(), &text) {
            eprintln!("btq: {}", CliError::Io(e));
            return EXIT_USAGE;
        }
    }
    code
}

fn emit(out: Option<&std::path::Path>, text: &str) -> io::Result<()> {
    match out {
        Some(path) => fs::write(path, text),
        None => io::stdout().lock().write_all(text.as_bytes()),
    }
}

fn dispatch(
    command: &Command,
) -> (
    Option<std::path::PathBuf>,
    Result<commands::Output, CliError>,
) {
    use btquot::quotient::Variant;
    let (common, window, variant) = match command {
        Command::Quotient {
            common,
            window,
            variant,
        } => (common, *window, (*variant).into()),
        Command::Verify { common, window, .. } => (common, *window, Variant::Gamma),
        Command::Cosets { common, .. }
        | Command::Orbits { common }
        | Command::Distance { common, .. }
        | Command::Irreducibles { common } => (common, None, Variant::Gamma),
    };
    let cfg = match RunConfig::from_common(common, window, variant) {
        Ok(cfg) => cfg,
        Err(e) => return (common.out.clone(), Err(e)),
    };
    let result = match command {
        Command::Quotient { .. } => commands::cmd_quotient(&cfg),
        Command::Verify { f_independence, .. } => commands::cmd_verify(&cfg, *f_independence),
        Command::Cosets { n, m, .. } => commands::cmd_cosets(&cfg, *n, *m),
        Command::Orbits { .. } => commands::cmd_orbits(&cfg),
        Command::Distance { matrix, .. } => commands::cmd_distance(&cfg, matrix),
        Command::Irreducibles { .. } => commands::cmd_irreducibles(&cfg),
    };
    (cfg.out, result)
}
