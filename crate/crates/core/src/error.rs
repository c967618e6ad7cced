use thiserror::Error;

/// Crate-wide error type.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("vertex {vertex} out of range for a graph of order {n}")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("self-loop at vertex {0}")]
    Loop(usize),

    #[error("duplicate edge ({0}, {1})")]
    DuplicateEdge(usize, usize),

    #[error("graph of order {n} exceeds the supported maximum of {max}")]
    TooLarge { n: usize, max: usize },

    #[error("graph is disconnected")]
    Disconnected,

    #[error("({0}, {1}) is not an edge")]
    NotAnEdge(usize, usize),

    #[error("dimension mismatch: expected {expected}, got {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error(
        "power iteration did not close the bracket after {iterations} iterations \
         (best bracket [{lower}, {upper}])"
    )]
    NotConverged {
        iterations: usize,
        lower: f64,
        upper: f64,
    },

    #[error("graph6: {0}")]
    Graph6(String),

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("hypothesis violated: {0}")]
    Hypothesis(#[from] crate::transforms::HypothesisViolation),

    #[error("no connected graph on {n} vertices matches the filter")]
    EmptyClass { n: usize },
}

pub type Result<T> = std::result::Result<T, Error>;
