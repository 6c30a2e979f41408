use thiserror::Error;

/// Errors reported by the library.
#[derive(Debug, Error)]
pub enum Error {
    /// graph6 decoding failed; `offset` is the byte position within the record.
    #[error("graph6 parse error at byte {offset}: {reason}")]
    Graph6 { offset: usize, reason: String },

    /// A precondition on an argument was violated (unknown vertex, edge not in
    /// the graph, shore out of range, family order below minimum, ...).
    #[error("invalid argument: {0}")]
    Argument(String),

    /// The operation is defined only for matching covered graphs.
    #[error("graph is not matching covered")]
    NotMatchingCovered,

    /// The operation is defined only for bricks.
    #[error("graph is not a brick")]
    NotABrick,

    /// A corpus file could not be read or contained a bad record.
    #[error("corpus error at line {line}: {reason}")]
    Corpus { line: usize, reason: String },

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl Error {
    pub fn argument(msg: impl Into<String>) -> Self {
        Error::Argument(msg.into())
    }

    pub fn graph6(offset: usize, reason: impl Into<String>) -> Self {
        Error::Graph6 {
            offset,
            reason: reason.into(),
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
