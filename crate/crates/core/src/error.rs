use thiserror::Error;

/// Errors produced by the toolkit.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("malformed graph6 input: {0}")]
    MalformedGraph6(String),

    #[error("malformed edge list: {0}")]
    MalformedEdgeList(String),

    #[error("graph has {0} vertices; at most 64 are supported")]
    TooLarge(usize),

    #[error("invalid size: {0}")]
    InvalidSize(String),

    #[error("operation needs at least one vertex")]
    EmptyGraph,

    #[error("a cycle needs at least 3 vertices, graph has {0}")]
    TooSmall(usize),

    #[error("{what} is capped at n = {cap}, graph has n = {n}")]
    CapExceeded { what: &'static str, n: usize, cap: usize },

    #[error("vertex {0} is not on the cycle")]
    NotOnCycle(usize),

    #[error("invalid cycle: {0}")]
    InvalidCycle(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("replay precondition failed: {0}")]
    Precondition(String),

    #[error("certificate failed validation: {0}")]
    Validation(String),

    #[error("budget exhausted")]
    BudgetExhausted,

    #[error("i/o error: {0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
