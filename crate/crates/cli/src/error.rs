use std::path::PathBuf;

use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{}:{line}: {message}", path.display())]
    Parse { path: PathBuf, line: usize, message: String },
    #[error(transparent)]
    Precondition(#[from] tda_core::Error),
    #[error("{0}")]
    InvalidArgument(String),
    #[error("{}: {source}", path.display())]
    Io { path: PathBuf, source: std::io::Error },
}

impl CliError {
    pub const EXIT_INTERNAL: i32 = 1;
    pub const EXIT_PARSE: i32 = 3;
    pub const EXIT_PRECONDITION: i32 = 4;

    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Parse { .. } => Self::EXIT_PARSE,
            CliError::Precondition(_) | CliError::InvalidArgument(_) => Self::EXIT_PRECONDITION,
            CliError::Io { .. } => Self::EXIT_INTERNAL,
        }
    }
}

pub type Result<T> = std::result::Result<T, CliError>;
