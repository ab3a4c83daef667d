//! Crate-wide error type.
//!
//! Every fallible operation in this crate returns [`Error`]. Parse errors
//! carry positions so callers can point at the offending byte; capacity
//! errors name the limit that was exceeded instead of silently truncating.

use std::path::PathBuf;

/// Errors produced by graph parsing, decision procedures, and the miner.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    /// A caller-supplied value is malformed (bad vertex name, duplicate
    /// edge endpoint, labeling that is not a permutation, ...).
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    /// An input is larger than the guard for an exponential-time search.
    /// The guards are hard limits; no routine silently raises them.
    #[error("{what} exceeds the supported limit: got {got}, limit {limit}")]
    Capacity {
        what: &'static str,
        got: usize,
        limit: usize,
    },

    /// Malformed graph6 input. `offset` is the byte position within the
    /// string (after any optional `>>graph6<<` header).
    #[error("graph6 parse error at byte {offset}: {msg}")]
    Graph6 { offset: usize, msg: String },

    /// Malformed split-graph text input, with a 1-based line number and a
    /// 0-based byte offset within that line.
    #[error("split-graph parse error at line {line}, byte {byte}: {msg}")]
    SplitFormat {
        line: usize,
        byte: usize,
        msg: String,
    },

    /// A name lookup (catalog entry, vertex name) found nothing.
    #[error("unknown name {name:?}; known names: {known}")]
    UnknownName { name: String, known: String },

    /// A catalog file is self-inconsistent (bad checksum, wrong count, ...).
    #[error("catalog integrity error: {0}")]
    Integrity(String),

    /// An operation needed an artifact that was not supplied (for example a
    /// verification run requires a previously mined catalog).
    #[error("missing dependency: {0}")]
    Dependency(String),

    #[error("io error on {path}: {source}")]
    Io {
        path: PathBuf,
        source: std::io::Error,
    },

    #[error("json error: {0}")]
    Json(#[from] serde_json::Error),
}

impl Error {
    /// Convenience constructor used by file-touching helpers.
    pub fn io(path: impl Into<PathBuf>, source: std::io::Error) -> Self {
        Error::Io {
            path: path.into(),
            source,
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
