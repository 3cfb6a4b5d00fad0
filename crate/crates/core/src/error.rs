use thiserror::Error;

/// Everything that can go wrong while building or analysing a complex.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("vertex list is empty")]
    EmptyVertices,
    #[error("edge list is empty; no spanning structure is possible")]
    EmptyEdges,
    #[error("duplicate vertex `{0}`")]
    DuplicateVertex(String),
    #[error("duplicate edge id `{0}`")]
    DuplicateEdgeId(String),
    #[error("edge `{edge}` names unknown vertex `{vertex}`")]
    UnknownEndpoint { edge: String, vertex: String },
    #[error("edge `{0}` is a loop")]
    Loop(String),
    #[error("graph is disconnected: `{unreachable}` cannot be reached from `{root}`")]
    Disconnected { root: String, unreachable: String },
    #[error("not uni-cyclic: {0}")]
    NotUnicyclic(String),
    #[error("invalid layout: {0}")]
    InvalidLayout(String),
    #[error("{stage}: budget exceeded ({actual} > limit {limit})")]
    BudgetExceeded {
        stage: &'static str,
        limit: usize,
        actual: usize,
    },
    #[error("boundary index {index} out of range 1..={max}")]
    BoundaryIndex { index: usize, max: usize },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
