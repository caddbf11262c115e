use std::path::PathBuf;

use hyper3::Error;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error(transparent)]
    Lib(#[from] Error),
    #[error("{}: {source}", path.display())]
    File { path: PathBuf, source: Error },
    #[error("{}: {source}", path.display())]
    Io { path: PathBuf, source: std::io::Error },
    #[error("{0}")]
    Usage(String),
}

impl CliError {
    pub fn io(path: impl Into<PathBuf>, source: std::io::Error) -> Self {
        CliError::Io {
            path: path.into(),
            source,
        }
    }

    /// 3 when a search ran out of budget, 2 for anything else.
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Lib(Error::BudgetExceeded(_))
            | CliError::File {
                source: Error::BudgetExceeded(_),
                ..
            } => 3,
            _ => 2,
        }
    }
}
