use thiserror::Error;

/// Errors shared by all modules of the crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    IndexOutOfRange { vertex: usize, n: usize },
    #[error("self-loop at vertex {0} is not allowed")]
    SelfLoop(usize),
    #[error("product would have {0} vertices, above the construction limit {1}")]
    ProductTooLarge(usize, usize),
    #[error("graph on {n} vertices exceeds the limit {limit}")]
    GraphTooLarge { n: usize, limit: usize },
    #[error("operation requires a connected graph")]
    DisconnectedGraph,
    #[error("vertices {0} and {1} lie in different components")]
    UnreachablePair(usize, usize),
    #[error("more than {0} optimal sets; raise the cap to enumerate them all")]
    TooManyOptima(usize),
    #[error("solver deadline exceeded")]
    Timeout,
    #[error("check does not apply: {0}")]
    NotApplicable(&'static str),
    #[error("input is not a tree")]
    NotATree,
    #[error("input is not a split graph")]
    NotASplitGraph,
    #[error("input is not a block graph")]
    NotABlockGraph,
    #[error("the given set is not a general position set of the required size")]
    NotAGpSet,
    #[error("bad parameters: {0}")]
    BadParameters(String),
    #[error("malformed input: {0}")]
    MalformedInput(String),
    #[error("unsupported size: graph6 short form encodes at most 62 vertices, got {0}")]
    UnsupportedSize(usize),
    #[error("bad range: {0}")]
    BadRange(String),
}

pub type Result<T> = std::result::Result<T, Error>;
