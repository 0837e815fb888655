use std::path::PathBuf;

use thiserror::Error;

/// Errors raised across the simulator.
#[derive(Debug, Error)]
pub enum Error {
    /// A configuration value is missing, malformed, or violates an invariant.
    #[error("configuration error in `{field}`: {reason}")]
    Config { field: String, reason: String },

    /// A numerical routine was called outside its domain.
    #[error("domain error: {0}")]
    Domain(String),

    /// The simulation state does not satisfy an operation's precondition.
    #[error("state error: {0}")]
    State(String),

    /// A persisted artifact does not match the active configuration.
    #[error("incompatible file: {0}")]
    Incompatible(String),

    /// A persisted artifact could not be parsed.
    #[error("parse error at line {line}: {reason}")]
    Parse { line: usize, reason: String },

    #[error("i/o error on {}: {source}", path.display())]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
}

impl Error {
    pub(crate) fn config(field: impl Into<String>, reason: impl Into<String>) -> Self {
        Error::Config {
            field: field.into(),
            reason: reason.into(),
        }
    }

    pub(crate) fn io(path: impl Into<PathBuf>, source: std::io::Error) -> Self {
        Error::Io {
            path: path.into(),
            source,
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
