use std::io;
use std::path::PathBuf;

use thiserror::Error;

/// Errors raised across the stemming toolkit.
#[derive(Debug, Error)]
pub enum Error {
    #[error("I/O error on {path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: io::Error,
    },

    #[error("{path}:{line}: {message}")]
    Format {
        path: PathBuf,
        line: usize,
        message: String,
    },

    #[error("window size must be at least 2, got {0}")]
    InvalidWindow(usize),

    #[error("smoothing exponent must lie in (0, 1], got {0}")]
    InvalidAlpha(f64),

    #[error("association requested on an empty matrix")]
    EmptyMatrix,

    #[error("invalid pattern {pattern:?}: {reason}")]
    InvalidPattern { pattern: String, reason: String },

    #[error("invalid root {0:?}: roots must have 3 to 5 letters")]
    InvalidRoot(String),

    #[error("no candidate roots to select from")]
    NoCandidates,

    #[error("no gold pairs carry a root")]
    EmptyGold,

    #[error("word {0:?} is missing from a clustering")]
    MissingWord(String),

    #[error("empty corpus: {0}")]
    EmptyCorpus(String),

    #[error("invalid configuration: {0}")]
    Config(String),
}

impl Error {
    pub(crate) fn io(path: impl Into<PathBuf>, source: io::Error) -> Self {
        Error::Io {
            path: path.into(),
            source,
        }
    }

    pub(crate) fn format(path: impl Into<PathBuf>, line: usize, message: impl Into<String>) -> Self {
        Error::Format {
            path: path.into(),
            line,
            message: message.into(),
        }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
