use thiserror::Error;

use crate::coloring::Class;
use crate::graph::VertexId;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("invalid parameters d1 = {d1}, d2 = {d2}: need d1 >= 0 and d2 >= 2")]
    InvalidParams { d1: i64, d2: i64 },
    #[error("unknown vertex {0}")]
    UnknownVertex(VertexId),
    #[error("duplicate vertex {0}")]
    DuplicateVertex(VertexId),
    #[error("negative weight at vertex {0}")]
    NegativeWeight(VertexId),
    #[error("loop at vertex {0}")]
    Loop(VertexId),
    #[error("edge {0}-{1} has multiplicity 0")]
    ZeroMultiplicity(VertexId, VertexId),
    #[error("no edge between {0} and {1}")]
    MissingEdge(VertexId, VertexId),
    #[error("capacity of vertex {vertex} for class {class} would drop below zero")]
    CapacityUnderflow { vertex: VertexId, class: Class },
    #[error("weight of vertex {vertex} for class {class} is already zero")]
    WeightUnderflow { vertex: VertexId, class: Class },
    #[error("graphs have different parameters")]
    ParamsMismatch,
    #[error("precondition failed: {0}")]
    Precondition(&'static str),
}
