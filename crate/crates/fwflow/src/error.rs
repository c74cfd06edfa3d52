use std::path::PathBuf;

/// Errors surfaced by the library.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("polytope must have at least one vertex")]
    EmptyPolytope,

    #[error("invalid tableau: {0}")]
    InvalidTableau(String),

    #[error("{path}: line {line}: {msg}")]
    Parse {
        path: PathBuf,
        line: usize,
        msg: String,
    },

    #[error("invalid config: {0}")]
    Config(String),

    #[error("trace too short: need at least {need} points, got {got}")]
    TraceTooShort { need: usize, got: usize },

    #[error("missing {0} (attach an analytic value or a reference solve first)")]
    MissingReference(&'static str),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
