use thiserror::Error;

/// Crate-wide error type.
#[derive(Debug, Error)]
pub enum Error {
    #[error("vertex {vertex} out of range for graph of order {order}")]
    VertexOutOfRange { vertex: u32, order: usize },

    #[error("graph not connected")]
    Disconnected,

    #[error("graph is empty")]
    EmptyGraph,

    #[error("input is not a tree")]
    NotATree,

    #[error("invalid edge ({u}, {v}): {reason}")]
    InvalidEdge { u: u32, v: u32, reason: &'static str },

    #[error("probability {0} outside [0, 1]")]
    InvalidProbability(f64),

    #[error("invalid vertex ordering: {0}")]
    InvalidOrdering(&'static str),

    #[error("parse error on line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("value {value} does not fit in {width} bits")]
    FixedOverflow { value: u64, width: u32 },

    #[error("gamma code is undefined for 0")]
    GammaZero,

    #[error("bit cursor exhausted")]
    Exhausted,

    #[error("trit value {0} out of range (must be 0, 1 or 2)")]
    TritOutOfRange(u8),

    #[error("malformed label: {0}")]
    Malformed(String),

    #[error("parameter {name} = {value} outside supported range (max {max})")]
    Guard {
        name: &'static str,
        value: usize,
        max: usize,
    },

    #[error("invalid hierarchical decomposition: {0}")]
    InvalidDecomposition(String),

    /// Carries the original vertex ids of the subgraph the oracle was called on.
    #[error("separator oracle contract violated on a {size}-vertex subgraph: {reason}")]
    OracleViolation {
        size: usize,
        reason: String,
        vertices: Vec<u32>,
    },

    #[error("labels are incompatible: {0}")]
    LabelMismatch(&'static str),

    #[error("unknown vertex id {0}")]
    UnknownVertex(u32),

    #[error("graph has {components} components but the union provides only {copies} copies")]
    TooManyComponents { components: usize, copies: usize },

    #[error("a component of {size} vertices has no image in the universal graph's class")]
    ComponentNotCovered { size: usize },

    #[error("invalid embedding: {0}")]
    BadEmbedding(String),

    #[error("unknown scheme tag `{0}`")]
    UnknownScheme(String),

    #[error("{0}")]
    Unsupported(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
