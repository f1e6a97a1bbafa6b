//! Command-line front end: argument parsing, command dispatch and output rendering.

// `!(x <= tol)` is used on purpose so that NaN counts as a failure.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod args;
pub mod commands;

use std::fs;
use std::io::{self, Write};

pub use args::{Cli, Command};
pub use commands::{cmd_class6, cmd_classify, cmd_dirac, cmd_fpk, cmd_split, cmd_tables};

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error(transparent)]
    Core(#[from] lounesto_core::Error),
    #[error("invalid input: {0}")]
    Invalid(String),
    #[error("i/o error: {0}")]
    Io(#[from] io::Error),
    #[error("json error: {0}")]
    Json(#[from] serde_json::Error),
    #[error("csv error: {0}")]
    Csv(#[from] csv::Error),
}

impl CliError {
    /// 1 for a property violation, 2 for anything the caller got wrong.
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Core(lounesto_core::Error::Anomaly { .. }) => 1,
            _ => 2,
        }
    }
}

/// Rendered output of one command.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Report {
    pub body: String,
    pub violations: usize,
}

impl Report {
    pub fn exit_code(&self) -> u8 {
        u8::from(self.violations > 0)
    }
}

pub fn run(cli: &Cli) -> Result<Report, CliError> {
    match &cli.command {
        Command::Classify(c) => cmd_classify(c),
        Command::Split(c) => cmd_split(c),
        Command::Tables(c) => cmd_tables(c),
        Command::Dirac(c) => cmd_dirac(c),
        Command::Fpk(c) => cmd_fpk(c),
        Command::Class6(c) => cmd_class6(c),
    }
}

fn destination(cli: &Cli) -> Option<&std::path::Path> {
    let out = match &cli.command {
        Command::Classify(c) | Command::Split(c) => &c.output,
        Command::Tables(c) => &c.output,
        Command::Dirac(c) => &c.output,
        Command::Fpk(c) | Command::Class6(c) => &c.output,
    };
    out.out.as_deref()
}

/// Run and write the report; returns the process exit code.
pub fn execute(cli: &Cli) -> u8 {
    let result = run(cli).and_then(|report| {
        match destination(cli) {
            Some(path) => fs::write(path, &report.body)?,
            None => io::stdout().lock().write_all(report.body.as_bytes())?,
        }
        Ok(report)
    });
    match result {
        Ok(report) => report.exit_code(),
        Err(e) => {
            eprintln!("error: {e}");
            e.exit_code()
        }
    }
}
