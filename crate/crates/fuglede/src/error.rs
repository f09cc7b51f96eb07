use std::path::PathBuf;

use crate::setfile::ParseError;

/// Process exit codes.
pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_CAPACITY: i32 = 3;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{}: {source}", path.display())]
    Parse { path: PathBuf, source: ParseError },
    #[error("{}: {source}", path.display())]
    Io { path: PathBuf, source: std::io::Error },
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Core(#[from] fuglede_core::Error),
    /// A check the command performs came out negative.
    #[error("{0}")]
    Failed(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        use fuglede_core::Error as E;
        match self {
            CliError::Parse { .. } | CliError::Io { .. } | CliError::Usage(_) => EXIT_USAGE,
            CliError::Failed(_) => EXIT_FAILED,
            CliError::Core(e) if e.is_capacity() => EXIT_CAPACITY,
            CliError::Core(E::InvalidInput(fuglede_core::InvalidInput::EmptySet)) => EXIT_USAGE,
            CliError::Core(
                E::NotPrime(_) | E::ZeroExponent | E::OutOfRange { .. } | E::NotAUnit { .. } | E::ParamsMismatch { .. },
            ) => EXIT_USAGE,
            CliError::Core(_) => EXIT_FAILED,
        }
    }
}
