//! Error types shared across the crate.

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("graph has {order} vertices, more than the supported {max}")]
    TooLarge { order: usize, max: usize },
    #[error("vertex {vertex} out of range for a graph on {order} vertices")]
    VertexOutOfRange { vertex: usize, order: usize },
    #[error("loop at vertex {0}")]
    Loop(usize),
    #[error("duplicate edge {0}-{1}")]
    DuplicateEdge(usize, usize),
    #[error("adjacency is not symmetric between {0} and {1}")]
    Asymmetric(usize, usize),
    #[error("{0}-{1} is not an edge")]
    NotAnEdge(usize, usize),
    #[error("operation undefined on the empty graph")]
    Empty,
    #[error("bad parameter: {0}")]
    BadParameter(&'static str),
}

/// Raised by exhaustive computations that refuse inputs above their bound.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("order {order} exceeds the exhaustive bound {bound}")]
    BoundExceeded { order: usize, bound: usize },
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error("coloring is not proper")]
    ImproperColoring,
    #[error("vertex {0} is uncolored")]
    Uncolored(usize),
}
