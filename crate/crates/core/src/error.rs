use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid board dimension {0}: side length must be at least 2")]
    InvalidDimension(usize),

    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),

    #[error("invalid comparison: {0}")]
    InvalidComparison(String),

    #[error("invalid word: {0}")]
    InvalidWord(String),

    #[error("invalid puzzle: {0}")]
    InvalidPuzzle(String),

    #[error("invalid board: {0}")]
    InvalidBoard(String),

    #[error("resource limit: {0}")]
    ResourceLimit(String),

    #[error("precondition failed: {0}")]
    Precondition(String),

    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
}

impl Error {
    pub(crate) fn parse(line: usize, msg: impl Into<String>) -> Self {
        Error::Parse {
            line,
            msg: msg.into(),
        }
    }
}
