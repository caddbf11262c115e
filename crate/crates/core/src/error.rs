use thiserror::Error;

use crate::hypercore::{TransitivityViolation, Vertex};

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("triple ({0}, {1}, {2}) repeats a vertex")]
    InvalidTriple(Vertex, Vertex, Vertex),

    #[error("vertex {vertex} is outside 1..={order}")]
    InvalidVertex { vertex: Vertex, order: usize },

    #[error("edge {{{0}, {1}, {2}}} appears more than once")]
    DuplicateEdge(Vertex, Vertex, Vertex),

    #[error("not a permutation of 1..={0}")]
    InvalidPermutation(usize),

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("hypergraph is not even: {{{}, {}, {}, {}}} induces an odd number of edges", .0[0], .0[1], .0[2], .0[3])]
    NotEven([Vertex; 4]),

    #[error("orientation is not transitive: {0}")]
    NotTransitive(TransitivityViolation),

    #[error("coloring is not proper: edge {{{0}, {1}, {2}}} is monochromatic")]
    ImproperColoring(Vertex, Vertex, Vertex),

    #[error("digraph has a directed cycle")]
    Cyclic,

    #[error("order {order} exceeds the configured limit {limit}")]
    SizeLimit { order: usize, limit: usize },

    #[error("search budget of {0} nodes exceeded")]
    BudgetExceeded(u64),

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
}

impl Error {
    pub(crate) fn parse(line: usize, message: impl Into<String>) -> Self {
        Error::Parse {
            line,
            message: message.into(),
        }
    }
}
