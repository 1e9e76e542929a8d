//! Command-line surface for the uniform subset graph connectivity toolkit:
//! graph generation, connectivity reports, witness construction, certificate
//! verification and the closed-form result table.
//!
//! Exit codes: 0 success/valid, 1 invalid certificate or disagreement,
//! 2 usage error, 3 capacity/budget exceeded (including sub-cases flagged as
//! omitted at the given parameters).

pub mod args;
pub mod cert;
pub mod commands;
pub mod formats;
pub mod render;
pub mod table;

/// A command's outcome: what to print on stdout and the process exit code.
#[derive(Debug, Clone)]
pub struct CmdOutput {
    pub stdout: String,
    pub exit: i32,
}

impl CmdOutput {
    pub fn ok(stdout: String) -> Self {
        CmdOutput { stdout, exit: 0 }
    }
}

/// Failure with a designated exit code; the message goes to stderr.
#[derive(Debug, Clone)]
pub struct CliError {
    pub message: String,
    pub exit: i32,
}

impl CliError {
    pub fn usage(message: impl Into<String>) -> Self {
        CliError {
            message: message.into(),
            exit: 2,
        }
    }

    pub fn invalid(message: impl Into<String>) -> Self {
        CliError {
            message: message.into(),
            exit: 1,
        }
    }

    pub fn capacity(message: impl Into<String>) -> Self {
        CliError {
            message: message.into(),
            exit: 3,
        }
    }
}

impl From<usg_core::Error> for CliError {
    fn from(e: usg_core::Error) -> Self {
        use usg_core::Error::*;
        let exit = match &e {
            TooLarge(_) | BudgetExceeded { .. } | SizeBoundExceeded { .. }
            | CapacityExceeded { .. } | NoSuperCutFound => 3,
            _ => 2,
        };
        CliError {
            message: e.to_string(),
            exit,
        }
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError::usage(format!("io error: {e}"))
    }
}

pub type CliResult = Result<CmdOutput, CliError>;
