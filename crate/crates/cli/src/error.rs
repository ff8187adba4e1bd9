use lorentz_core::Error;

/// Errors that end a CLI run, each tied to an exit status.
#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("validation error: {0}")]
    Validation(String),
    #[error("numeric error: {0}")]
    Numeric(String),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Validation(_) => 2,
            CliError::Numeric(_) => 3,
        }
    }
}

/// Bad indices, bad arguments and unparsable input are the caller's fault;
/// everything else is a numerical failure.
pub fn is_validation(e: &Error) -> bool {
    matches!(e, Error::Index(_) | Error::Domain(_) | Error::Parse(_))
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        if is_validation(&e) {
            CliError::Validation(e.to_string())
        } else {
            CliError::Numeric(e.to_string())
        }
    }
}
