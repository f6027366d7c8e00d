use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("unknown vertex `{0}`")]
    UnknownVertex(String),
    #[error("duplicate vertex `{0}`")]
    DuplicateVertex(String),
    #[error("loop at vertex `{0}`")]
    Loop(String),
    #[error("duplicate edge {0}-{1}")]
    DuplicateEdge(String, String),
    #[error("edge {0}-{1} is not in the graph")]
    EdgeNotInGraph(String, String),
    #[error("graphs are limited to {max} vertices, got {got}")]
    TooManyVertices { got: usize, max: usize },
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("no vertices")]
    NoVertices,
    #[error("invalid labeling: {0}")]
    InvalidLabeling(String),
    #[error("{0} is not a face of the complex")]
    NotAFace(String),
    #[error("{0:?} is not an antichain")]
    NotAntichain(Vec<usize>),
    #[error("oracle limit: {vertices} vertices exceeds cap {cap}")]
    OracleLimit { vertices: usize, cap: usize },
    #[error("precondition unmet: {0}")]
    Precondition(String),
    #[error("relation is not a strict partial order: {0}")]
    NotPartialOrder(String),
    #[error("generator: {0}")]
    Generator(String),
    #[error("internal invariant violated: {0}")]
    Invariant(String),
}
