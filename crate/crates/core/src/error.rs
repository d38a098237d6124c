use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("hypergraph must have at least one vertex")]
    NoVertices,
    #[error("vertex id {vertex} out of range (n = {n})")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("total hyperedge cost exceeds 2^62")]
    CostOverflow,
    #[error("cut side must be non-empty and proper")]
    TrivialCut,
    #[error("vertex set must be non-empty")]
    EmptySet,
    #[error("invalid partition: {0}")]
    InvalidPartition(String),
    #[error("terminal sets must be non-empty")]
    EmptyTerminals,
    #[error("terminal sets intersect")]
    TerminalsOverlap,
    #[error("k must be at least 1")]
    KZero,
    #[error("k exceeds vertex count (k = {k}, n = {n})")]
    KTooLarge { k: usize, n: usize },
    #[error("brute-force oracle limited to n <= {max} (got n = {n})")]
    OracleTooLarge { n: usize, max: usize },
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("no aggregation satisfies the bound: {0}")]
    AggregationFailed(String),
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("invalid generator parameters: {0}")]
    InvalidParams(String),
    #[error("unknown algorithm '{0}'")]
    UnknownAlgorithm(String),
}
