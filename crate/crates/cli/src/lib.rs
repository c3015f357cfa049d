//! Command implementations behind the `singlink` binary. Each command
//! returns its output and exit code instead of printing, so tests can call
//! them directly.
//!
//! Exit codes: 0 success, 1 unreadable or malformed input, 2 the input
//! parses but fails a mathematical precondition.

pub mod commands;
pub mod json;
pub mod report;

use thiserror::Error;

pub use report::Report;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{path}: {message}")]
    Input { path: String, message: String },
    #[error("{0}")]
    Usage(String),
    #[error("{0}")]
    Precondition(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Input { .. } | CliError::Usage(_) => 1,
            CliError::Precondition(_) => 2,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Json,
    Table,
}

#[derive(Debug, Clone, Copy)]
pub struct Options {
    pub coeff_cap: i64,
    pub rewrite_depth: usize,
}

impl Default for Options {
    fn default() -> Self {
        Options {
            coeff_cap: singlink::cycle::DEFAULT_COEFF_CAP,
            rewrite_depth: singlink::mcg::DEFAULT_REWRITE_DEPTH,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub stdout: String,
    pub stderr: String,
    pub code: i32,
}

impl Outcome {
    pub fn ok(stdout: String) -> Self {
        Outcome {
            stdout,
            stderr: String::new(),
            code: 0,
        }
    }
}
