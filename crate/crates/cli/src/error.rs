use thiserror::Error;

/// CLI failure classes, each mapped to a fixed process exit code.
#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Input(String),

    #[error("numeric failure: {0}")]
    Numeric(String),
}

impl CliError {
    /// 2 for input/validation problems, 3 for internal numeric failures.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Input(_) => 2,
            CliError::Numeric(_) => 3,
        }
    }
}

impl From<hqmm_core::Error> for CliError {
    fn from(err: hqmm_core::Error) -> Self {
        match err {
            hqmm_core::Error::EigenNoConvergence { .. } => CliError::Numeric(err.to_string()),
            other => CliError::Input(other.to_string()),
        }
    }
}

impl From<std::io::Error> for CliError {
    fn from(err: std::io::Error) -> Self {
        CliError::Input(err.to_string())
    }
}

pub type CliResult<T> = std::result::Result<T, CliError>;
