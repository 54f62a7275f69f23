use thiserror::Error;

use crate::graph::VertexId;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("a graph needs at least one vertex")]
    EmptyGraph,
    #[error("loop edge at vertex {0}")]
    LoopEdge(usize),
    #[error("endpoint {endpoint} out of range for a graph of order {order}")]
    EndpointOutOfRange { endpoint: usize, order: usize },
    #[error("edge multiplicity must be positive")]
    ZeroMultiplicity,
    #[error("expected {expected} labels, got {got}")]
    LabelCount { expected: usize, got: usize },
    #[error("vertex {0} is not in the graph")]
    UnknownVertex(VertexId),
    #[error("cannot pair vertex {0} with itself")]
    SameVertex(VertexId),
    #[error("vertices {0} and {1} are adjacent")]
    Adjacent(VertexId, VertexId),
    #[error("vertices {u} and {v} are not at distance 2 (distance {})", .distance.map_or("unreachable".to_string(), |d| d.to_string()))]
    NotAtDistanceTwo {
        u: VertexId,
        v: VertexId,
        distance: Option<usize>,
    },
    #[error("graph is disconnected")]
    Disconnected,
    #[error("graph is already complete")]
    AlreadyComplete,
    #[error("folded graph is not complete")]
    NotComplete,
    #[error("graph is not an odd cycle of length at least 5")]
    NotOddCycle,
    #[error("no colour assigned to vertex {0}")]
    MissingColour(VertexId),
    #[error("colouring is not proper")]
    ImproperColouring,
    #[error("colour indices must cover 0..k without gaps")]
    ColourGap,
    #[error("vertex order is not a permutation of the graph's vertices")]
    NotPermutation,
    #[error("fold step {index} is invalid: {reason}")]
    InvalidStep { index: usize, reason: String },
    #[error(
        "theorem violation: no optimal colouring has a monochromatic pair at distance 2"
    )]
    TheoremViolation,
    #[error("invalid family parameters: {0}")]
    InvalidParameter(String),
    #[error("no connected G(n, p) sample after {0} attempts")]
    RetriesExhausted(usize),
    #[error("order {order} exceeds the supported maximum of {max}")]
    TooLarge { order: usize, max: usize },
}
