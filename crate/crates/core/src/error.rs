use std::path::PathBuf;

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    /// An argument outside the domain of a formula.
    #[error("domain error: {0}")]
    Domain(String),

    /// Invalid configuration; one message per offending field.
    #[error("invalid configuration: {}", .0.join("; "))]
    Config(Vec<String>),

    /// Operation not allowed in the current state (e.g. stepping a finished episode).
    #[error("state error: {0}")]
    State(String),

    #[error("value iteration did not converge within {iterations} sweeps (residual {residual:e})")]
    NotConverged { iterations: usize, residual: f64 },

    #[error("parse error: {0}")]
    Parse(String),

    #[error("I/O error on {path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
}

impl Error {
    pub(crate) fn io(path: impl Into<PathBuf>, source: std::io::Error) -> Self {
        Error::Io {
            path: path.into(),
            source,
        }
    }

    pub(crate) fn config(msg: impl Into<String>) -> Self {
        Error::Config(vec![msg.into()])
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
