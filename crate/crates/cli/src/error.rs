use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Invalid(String),
    #[error("malformed input: {0}")]
    Malformed(String),
    #[error("{0}")]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Core(#[from] symcomvar::Error),
}

impl CliError {
    /// 1 for failed verification, 2 for malformed or invalid input.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Core(symcomvar::Error::Verification(_)) => 1,
            _ => 2,
        }
    }
}
