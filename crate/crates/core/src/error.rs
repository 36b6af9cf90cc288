use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("input contains no vertices")]
    EmptyInput,

    #[error("invalid generator spec: {0}")]
    Generator(String),

    #[error("invalid graph source `{0}`")]
    Source(String),

    #[error("vertex {vertex} out of range for a graph with {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("graph too large: {0} exceeds the 32-bit id space")]
    TooLarge(usize),

    #[error("edge set is not a forest: edge ({0}, {1}) closes a cycle")]
    NotAForest(usize, usize),

    #[error("parent array contains a cycle through vertex {0}")]
    Cycle(usize),

    #[error("pointer structure is not fully compressed at vertex {0}")]
    Uncompressed(usize),

    #[error("length mismatch: expected {expected}, found {found}")]
    LengthMismatch { expected: usize, found: usize },

    #[error("unknown algorithm `{0}`")]
    UnknownAlgorithm(String),

    #[error("inconsistent state: {0}")]
    Corrupt(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Csv(#[from] csv::Error),
}
