use std::path::PathBuf;

use cubic_core::ErrorKind;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error(transparent)]
    Core(#[from] cubic_core::Error),
    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
    #[error("{path}: {message}")]
    Parse { path: PathBuf, message: String },
    #[error("{path}: expected a `{expected}` document, found `{found}`")]
    KindMismatch { path: PathBuf, expected: String, found: String },
    #[error("{0}")]
    Usage(String),
}

impl CliError {
    pub fn parse(path: impl Into<PathBuf>, message: impl ToString) -> Self {
        CliError::Parse { path: path.into(), message: message.to_string() }
    }

    pub fn io(path: impl Into<PathBuf>, source: std::io::Error) -> Self {
        CliError::Io { path: path.into(), source }
    }

    /// 2 for validation and domain failures, 3 for shape, parse and IO
    /// failures, 4 for usage errors.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Core(e) => match e.kind() {
                ErrorKind::Validation | ErrorKind::Domain => 2,
                ErrorKind::Shape => 3,
            },
            CliError::Io { .. } | CliError::Parse { .. } | CliError::KindMismatch { .. } => 3,
            CliError::Usage(_) => 4,
        }
    }
}

pub type Result<T, E = CliError> = std::result::Result<T, E>;
