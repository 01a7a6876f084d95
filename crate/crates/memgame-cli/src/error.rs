use thiserror::Error;

/// Everything the CLI can fail with, each mapped to one exit code.
#[derive(Debug, Error)]
pub enum CliError {
    /// Bad flag, bad config line, or value outside its domain.
    #[error("{0}")]
    Usage(String),
    /// Range or shape error from the core library.
    #[error("{0}")]
    Core(memgame::Error),
    /// Configuration the library cannot evaluate.
    #[error("unsupported configuration: {0}")]
    Unsupported(String),
    /// A check ran and did not pass.
    #[error("{0}")]
    Failed(String),
    /// Reading a config or writing output.
    #[error("{path}: {source}")]
    Io { path: String, source: std::io::Error },
}

impl From<memgame::Error> for CliError {
    fn from(e: memgame::Error) -> Self {
        match e {
            memgame::Error::Unsupported(what) => CliError::Unsupported(what.into()),
            other => CliError::Core(other),
        }
    }
}

impl CliError {
    /// 2 usage/range, 3 unsupported, 4 check failed.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) | CliError::Core(_) | CliError::Io { .. } => 2,
            CliError::Unsupported(_) => 3,
            CliError::Failed(_) => 4,
        }
    }
}

pub type CliResult<T> = Result<T, CliError>;
