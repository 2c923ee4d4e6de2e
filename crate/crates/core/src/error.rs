use thiserror::Error;

/// Errors surfaced by the analyses in this crate.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("operation requires at least {required} vertices, graph has {actual}")]
    TooFewVertices { required: usize, actual: usize },

    #[error("vertex {vertex} out of range for graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("invalid edge ({0}, {1})")]
    InvalidEdge(usize, usize),

    #[error("duplicate edge ({0}, {1})")]
    DuplicateEdge(usize, usize),

    #[error("malformed graph6: {0}")]
    Graph6(String),

    #[error("length mismatch: expected {expected}, got {actual}")]
    LengthMismatch { expected: usize, actual: usize },

    #[error("zero vector")]
    ZeroVector,

    #[error("non-finite matrix entry at ({0}, {1})")]
    NonFinite(usize, usize),

    #[error("matrix is not symmetric at ({0}, {1})")]
    NotSymmetric(usize, usize),

    /// Carries the best iterate reached before the cap.
    #[error("eigensolver did not converge after {iterations} iterations (residual {residual:e})")]
    NoConvergence {
        iterations: usize,
        residual: f64,
        value: f64,
        vector: Vec<f64>,
    },

    #[error("graph on {n} vertices exceeds the limit of {cap} for this method")]
    TooLarge { n: usize, cap: usize },

    #[error("invalid path-cover witness: {0}")]
    InvalidWitness(String),

    #[error("invalid parameters: {0}")]
    InvalidParameters(String),

    #[error("edge ({0}, {1}) is not inside Y ∪ Z")]
    EdgeOutsideE1(usize, usize),

    #[error("deleted edge set has {actual} edges, {expected}")]
    WrongEdgeBudget { actual: usize, expected: String },

    #[error("cannot draw {count} distinct samples: only {available} exist")]
    ImpossibleCount { count: usize, available: u128 },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
