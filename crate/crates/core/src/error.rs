use thiserror::Error;

/// Errors across the library. Variants mirror the failure modes of the
/// individual construction and query operations.
#[derive(Debug, Error)]
pub enum Error {
    #[error("embedding is not planar: nodes {nodes} - edges {edges} + faces {faces} != components {components} + 1")]
    NotPlanarEmbedding {
        nodes: usize,
        edges: usize,
        faces: usize,
        components: usize,
    },
    #[error("graph is not simple: {0}")]
    NotSimple(String),
    #[error("inconsistent rotation system: {0}")]
    InconsistentRotation(String),
    #[error("graph is not a triangulation: face {0} has size {1}")]
    NotTriangulated(usize, usize),
    #[error("negative weight on edge {0}")]
    NegativeWeight(usize),
    #[error("terminals are not in order on the outer face")]
    TerminalsNotInOrder,
    #[error("label: path has two or more pre-labeled nodes")]
    TwoPrelabeledNodes,
    #[error("no balanced non-tree edge exists (a face weight exceeds a quarter of the total)")]
    NoBalancedEdge,
    #[error("separator cycle is degenerate")]
    DegenerateSeparator,
    #[error("face {0} has more than three nodes")]
    FaceTooLarge(usize),
    #[error("Monge audit failed: unit weights violate the quadrangle inequality at {0:?}")]
    MongeViolation(String),
    #[error("instance too large for this oracle: {0} > {1}")]
    TooLarge(usize, usize),
    #[error("division audit failed: {0}")]
    DivisionAudit(String),
    #[error("{0}")]
    Invalid(String),
}

pub type Result<T> = std::result::Result<T, Error>;
