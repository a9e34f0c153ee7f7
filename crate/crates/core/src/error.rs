use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("vertex {0} out of range for a graph on {1} vertices")]
    VertexOutOfRange(usize, usize),
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("edge {0}-{1} already present")]
    DuplicateEdge(usize, usize),
    #[error("edge {0}-{1} not present")]
    MissingEdge(usize, usize),
    #[error("graph has {n} vertices; limit is {limit}")]
    TooLarge { n: usize, limit: usize },
    #[error("graph6: {0}")]
    Graph6(String),
    #[error("conflicting constraint on vertex {0}")]
    ConflictingConstraint(usize),
    #[error("invalid triangulation: {0}")]
    InvalidMop(String),
    #[error("faces {0} and {1} are not adjacent")]
    FacesNotAdjacent(usize, usize),
    #[error("domination threshold must be at least 1, got {0}")]
    BadThreshold(usize),
    #[error("input is not a tree")]
    NotATree,
    #[error("{family} size {n} outside supported range {min}..={max}")]
    OutOfRange {
        family: &'static str,
        n: usize,
        min: usize,
        max: usize,
    },
    #[error("infeasible parameters: {0}")]
    Infeasible(String),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
