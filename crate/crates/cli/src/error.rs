//! CLI error type carrying the process exit code: 1 for validation
//! problems, 2 for I/O problems. A consumer closing stdout early (piping
//! into `head`) is not a failure and carries exit code 0.

use std::fmt;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CliError {
    Validation(String),
    Io(String),
    /// Stdout's consumer closed the stream before the run finished writing.
    /// Everything the consumer asked for was delivered, so this unwinds the
    /// run quietly and exits 0.
    OutputClosed,
}

impl CliError {
    pub fn validation(msg: String) -> Self {
        CliError::Validation(msg)
    }

    pub fn io(msg: String) -> Self {
        CliError::Io(msg)
    }

    /// Classify a stdout write failure: a broken pipe means the consumer
    /// closed the stream (quiet success); anything else is a real i/o error.
    pub fn from_stdout_write(e: std::io::Error) -> Self {
        if e.kind() == std::io::ErrorKind::BrokenPipe {
            CliError::OutputClosed
        } else {
            CliError::Io(format!("cannot write to stdout: {e}"))
        }
    }

    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Validation(_) => 1,
            CliError::Io(_) => 2,
            CliError::OutputClosed => 0,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Validation(msg) => write!(f, "error: {msg}"),
            CliError::Io(msg) => write!(f, "i/o error: {msg}"),
            CliError::OutputClosed => f.write_str("output stream closed by its consumer"),
        }
    }
}

impl std::error::Error for CliError {}

impl From<lqu_core::Error> for CliError {
    fn from(e: lqu_core::Error) -> Self {
        CliError::Validation(e.to_string())
    }
}
