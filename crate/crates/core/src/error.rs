use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("a graph needs at least one vertex")]
    NoVertices,
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("duplicate edge {0}-{1}")]
    DuplicateEdge(usize, usize),
    #[error("vertex set is empty")]
    EmptySet,
    #[error("the two vertices must be distinct")]
    SameVertex,
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("not a simplicial elimination ordering")]
    InvalidOrder,
    #[error("not a partition of the vertex set: {0}")]
    NotAPartition(String),
    #[error("invalid certificate: {0}")]
    InvalidCertificate(String),
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("instance too large: {n} vertices exceeds the limit of {limit}")]
    TooLarge { n: usize, limit: usize },
    #[error("shared vertices do not form a clique in both graphs")]
    NotAClique,
    #[error("graph is not in the class: {0}")]
    NotInClass(String),
}

pub type Result<T> = std::result::Result<T, Error>;
