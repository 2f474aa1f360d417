use thiserror::Error;

/// Errors shared by every module of the toolkit.
#[derive(Debug, Error)]
pub enum Error {
    #[error("interval endpoints must satisfy lo < hi (got {0} >= {1})")]
    InvalidInterval(String, String),
    #[error("point {0} lies outside the union of the family")]
    PointOutsideUnion(String),
    #[error("the union of the family does not equal the base interval")]
    UnionMismatch,
    #[error("no reach chain exists: no point attains the base endpoint")]
    NoChain,
    #[error("cover has fewer than two elements; nothing to double")]
    CoverTooSmall,
    #[error("order types are incompatible: outer list is shorter than inner list")]
    IncompatibleOrderTypes,
    #[error("precondition violated: {0}")]
    PreconditionViolated(String),
    #[error("operators live on different grids")]
    GridMismatch,
    #[error("rank parameter {r} out of range for dimension {dim}")]
    RankOutOfRange { r: usize, dim: usize },
    #[error("grid intervals overlap but must be pairwise disjoint")]
    OverlappingIntervals,
    #[error("block shapes are not conformable: {0}")]
    ShapeMismatch(String),
    #[error("invalid cut chain: {0}")]
    BadChain(String),
    #[error("node index {node} out of range (grid has cuts 0..={max})")]
    NodeOutOfRange { node: usize, max: usize },
    #[error("the listed intervals do not form a partition of the grid")]
    NotAPartition,
    #[error("unknown canonical net kind: {0}")]
    UnknownKind(String),
    #[error("invalid order map: {0}")]
    InvalidOrderMap(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
