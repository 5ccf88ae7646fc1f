use thiserror::Error;

/// Errors shared by every module of the crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("vertex {vertex} out of range for a graph with {vertex_count} vertices")]
    VertexOutOfRange { vertex: usize, vertex_count: usize },

    #[error("self-loop on vertex {0}")]
    SelfLoop(usize),

    #[error("graph is not connected")]
    Disconnected,

    #[error("not a permutation of 0..{expected}: {reason}")]
    NotPermutation { expected: usize, reason: String },

    #[error("search prefix does not belong to this graph")]
    InconsistentPrefix,

    #[error("graph is not chordal")]
    NotChordal,

    #[error("graph is not a split graph")]
    NotSplit,

    #[error("graph is not an interval graph")]
    NotInterval,

    #[error("graph is not a unit interval graph")]
    NotUnitInterval,

    #[error("graph is not (claw, net)-free")]
    NotClawNetFree,

    #[error("invalid clique order: {0}")]
    InvalidCliqueOrder(String),

    #[error("class hint `{0}` is contradicted by the graph")]
    ContradictoryHint(String),

    #[error("{what}: size {size} exceeds guard {guard}")]
    GuardExceeded {
        what: &'static str,
        size: usize,
        guard: usize,
    },

    #[error("invalid formula: {0}")]
    InvalidFormula(String),

    #[error("assignment does not satisfy the formula (clause {clause} is false)")]
    Unsatisfying { clause: usize },

    #[error("DIMACS parse error on line {line}: {message}")]
    Dimacs { line: usize, message: String },

    #[error("{0} is not supported for this search kind")]
    UnsupportedKind(&'static str),

    #[error("witness construction failed: {0}")]
    Witness(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
