use thiserror::Error;

use crate::hypergraph::Vertex;

/// Everything that can go wrong while building, analysing or transforming a
/// hypergraph.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("edge cardinality must be at least 2, got {0}")]
    BadUniformity(usize),
    #[error("a hypergraph needs at least one edge")]
    EmptyEdgeList,
    #[error("edge {index} has {found} distinct vertices, expected {expected}")]
    WrongEdgeSize {
        index: usize,
        expected: usize,
        found: usize,
    },
    #[error("duplicate edge {0:?}")]
    DuplicateEdge(Vec<Vertex>),
    #[error("vertex {vertex} is out of range for {n} vertices")]
    VertexOutOfRange { vertex: Vertex, n: usize },
    #[error("vertex {0} lies in no edge")]
    IsolatedVertex(Vertex),
    #[error("malformed input: {0}")]
    Parse(String),

    #[error("hypergraph is not linear")]
    NotLinear,
    #[error("vertex {1} is unreachable from vertex {0}")]
    Unreachable(Vertex, Vertex),
    #[error("invalid family: {0}")]
    InvalidFamily(String),
    #[error("expected {expected}, found {found}")]
    WrongClass {
        expected: &'static str,
        found: String,
    },
    #[error("outside formula scope: {0}")]
    OutOfScope(String),
    #[error("uniformity mismatch: {0} vs {1}")]
    MixedUniformity(usize, usize),
    #[error("enumeration bound exceeded: {0}")]
    BoundExceeded(String),
    #[error("precondition failed: {0}")]
    Precondition(String),
    #[error("internal consistency check failed: {0}")]
    Inconsistent(String),
}

impl Error {
    /// True for errors caused by a malformed or invalid hypergraph description,
    /// as opposed to a valid object that an operation cannot accept.
    pub fn is_invalid_input(&self) -> bool {
        matches!(
            self,
            Error::BadUniformity(_)
                | Error::EmptyEdgeList
                | Error::WrongEdgeSize { .. }
                | Error::DuplicateEdge(_)
                | Error::VertexOutOfRange { .. }
                | Error::IsolatedVertex(_)
                | Error::Parse(_)
        )
    }
}

pub type Result<T> = std::result::Result<T, Error>;
