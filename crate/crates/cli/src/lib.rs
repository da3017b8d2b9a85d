//! Front end for `covsys-core`: the JSON system format, the `verify`,
//! `analyze`, `map` and `construct` commands and their text and JSON reports.

pub mod commands;
pub mod input;
pub mod report;

use covsys_core::Error;

pub use input::{ClassSpec, FieldSpec, SystemFile};

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("cannot read {path}: {source}")]
    Io { path: String, source: std::io::Error },
    #[error("malformed input: {0}")]
    Parse(String),
    #[error("invalid input: {0}")]
    Input(Error),
    #[error("{0}")]
    Core(Error),
}

impl CliError {
    /// 1 for a negative result, 2 for unusable input, 3 when a resource
    /// limit stopped the computation.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Io { .. } | CliError::Parse(_) => 2,
            CliError::Input(e) | CliError::Core(e) if is_limit(e) => 3,
            CliError::Input(_) => 2,
            CliError::Core(_) => 1,
        }
    }
}

fn is_limit(e: &Error) -> bool {
    e.is_resource_limit() || matches!(e, Error::UnsupportedPrime { .. })
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::Core(e)
    }
}

/// What a command prints on stdout, and the process exit code.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub stdout: String,
    pub code: i32,
}
