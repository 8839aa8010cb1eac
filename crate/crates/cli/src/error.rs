use std::path::PathBuf;

use thiserror::Error;

/// Exit status for malformed input of any kind.
pub const EXIT_PARSE: i32 = 2;
/// Exit status when an internal consistency check fails.
pub const EXIT_INCONSISTENT: i32 = 3;
/// Exit status for a negative answer (`verify` on a non-ideal, a failed batch entry).
pub const EXIT_NEGATIVE: i32 = 1;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("cannot read {path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },

    #[error("{origin}: line {line}, column {column}: {message}")]
    Json {
        origin: String,
        line: usize,
        column: usize,
        message: String,
    },

    #[error("{origin}: {message}")]
    Parse { origin: String, message: String },

    #[error("{0}")]
    Usage(String),

    #[error(transparent)]
    Engine(#[from] ideals3::Error),

    #[error("consistency check failed: {0}")]
    Check(String),
}

impl CliError {
    pub fn json(origin: impl Into<String>, err: &serde_json::Error) -> Self {
        CliError::Json {
            origin: origin.into(),
            line: err.line(),
            column: err.column(),
            message: err.to_string(),
        }
    }

    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Engine(ideals3::Error::InconsistencyDetected(_) | ideals3::Error::BoundViolation(_))
            | CliError::Check(_) => EXIT_INCONSISTENT,
            _ => EXIT_PARSE,
        }
    }
}
