use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    /// Unsupported Lie type, rank, node, or space specification.
    #[error("configuration error: {0}")]
    Config(String),

    #[error("node index {index} out of range for rank {rank}")]
    IndexOutOfRange { index: usize, rank: usize },

    #[error("elements belong to different root systems ({0} vs {1})")]
    MismatchedSystems(String, String),

    #[error("element is not a minimal coset representative")]
    NotMinimal,

    #[error("degree {0} out of range (maximum {1})")]
    DegreeOutOfRange(usize, usize),

    #[error("integer overflow in {0}")]
    Overflow(&'static str),

    #[error("syntax error at line {line}, column {column}: {message}")]
    Syntax {
        line: usize,
        column: usize,
        message: String,
    },

    #[error("invalid class label {0}")]
    Census(String),

    #[error("duplicate product {0} at line {1}")]
    DuplicatePair(String, usize),

    #[error("expected {expected} products, found {found}")]
    EntryCount { expected: usize, found: usize },

    #[error("index inference failed: {0}")]
    NonIntegralIndex(String),

    #[error("malformed word {0:?}")]
    Word(String),

    #[error("{0}")]
    Io(String),
}
