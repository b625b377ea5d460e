use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },

    #[error("invalid instance: {0}")]
    InvalidInstance(String),

    #[error("invalid input: {0}")]
    InvalidInput(String),

    /// The search would have to visit more states than the configured cap.
    /// This is an explicit refusal, never a wrong verdict.
    #[error("state cap exceeded after exploring {explored} states (cap {cap})")]
    StateCapExceeded { explored: u64, cap: u64 },

    #[error("graph is not connected")]
    Disconnected,

    #[error("not a vertex cover: edge {0}-{1} has no endpoint in the cover")]
    NotAVertexCover(String, String),

    #[error("replay log is inconsistent with the sequence: {0}")]
    InconsistentReplayLog(String),

    #[error("instance generation failed: {0}")]
    GenerationFailed(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
