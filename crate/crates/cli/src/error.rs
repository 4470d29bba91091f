use std::fmt::Display;
use std::process::ExitCode;

use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    /// Bad flags, unreadable files, malformed configuration.
    #[error("{0}")]
    Usage(String),
    /// The inputs were understood but the computation rejected them.
    #[error("{0}")]
    Domain(String),
}

impl CliError {
    pub fn exit_code(&self) -> ExitCode {
        match self {
            CliError::Usage(_) => ExitCode::from(2),
            CliError::Domain(_) => ExitCode::from(1),
        }
    }
}

pub fn domain(e: impl Display) -> CliError {
    CliError::Domain(e.to_string())
}
