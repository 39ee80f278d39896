use crate::format::ParseRationalError;

/// Exit status for argument errors (bad values, impossible parameters).
pub const EXIT_USAGE: u8 = 2;
/// Exit status when an exact identity check fails.
pub const EXIT_INVARIANT: u8 = 3;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Parse(#[from] ParseRationalError),
    #[error(transparent)]
    Core(#[from] newton_cond_core::Error),
    #[error("invariant violated: {0}")]
    Invariant(String),
    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),
    #[error("json error: {0}")]
    Json(#[from] serde_json::Error),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Invariant(_) => EXIT_INVARIANT,
            _ => EXIT_USAGE,
        }
    }
}

pub type Result<T> = std::result::Result<T, CliError>;
