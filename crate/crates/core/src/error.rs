use std::path::PathBuf;

use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("graph must have at least one vertex")]
    NoVertices,

    #[error("loop at vertex {0} (only simple graphs are supported)")]
    Loop(usize),

    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("graph6 parse error at byte {offset}: {message}")]
    Graph6 { offset: usize, message: String },

    #[error("edge list parse error on line {line}: {message}")]
    EdgeList { line: usize, message: String },

    #[error("invalid vertex set: {0}")]
    InvalidVertexSet(String),

    #[error("invalid partition: {0}")]
    InvalidPartition(String),

    #[error("operation needs at least {needed} vertices, graph has {n}")]
    TooFewVertices { needed: usize, n: usize },

    #[error("graph is disconnected")]
    Disconnected,

    #[error("negative radicand {radicand} for n={n}, m={m}, delta={delta}")]
    NegativeRadicand {
        n: usize,
        m: usize,
        delta: usize,
        radicand: f64,
    },

    #[error("edge rotation precondition violated: {0}")]
    Rotation(String),

    #[error("hypothesis not satisfied: {0}")]
    Hypothesis(String),

    #[error("{what}: size {actual} exceeds limit {limit}")]
    LimitExceeded {
        what: &'static str,
        limit: usize,
        actual: usize,
    },

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
}
