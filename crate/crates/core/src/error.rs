use thiserror::Error;

/// Errors surfaced by the graphon-spectra library.
#[derive(Debug, Error)]
pub enum Error {
    #[error("matrix is not symmetric (max deviation {max_dev:.3e})")]
    NotSymmetric { max_dev: f64 },

    #[error("matrix is not Hermitian (max deviation {max_dev:.3e})")]
    NotHermitian { max_dev: f64 },

    #[error("invalid cell measures: {0}")]
    BadMeasures(String),

    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("LAPACK routine {routine} failed (info = {info})")]
    Lapack { routine: &'static str, info: i32 },

    #[error("unknown signed index {0}")]
    UnknownIndex(i32),

    #[error("operands live on different partitions; take a common refinement first")]
    PartitionMismatch,

    #[error("graphon value {value} at ({row}, {col}) outside [0, 1]")]
    ValueOutOfRange { row: usize, col: usize, value: f64 },

    #[error("adjacency matrix is not a simple graph: {0}")]
    BadAdjacency(String),

    #[error("exact cut norm supports at most {max} cells, got {got}")]
    TooManyCells { max: usize, got: usize },

    #[error("sample spectrum not yet converged: {0}")]
    NotYetConverged(String),

    #[error("invalid group: {0}")]
    InvalidGroup(String),

    #[error("invalid irrep `{label}`: {reason}")]
    InvalidIrrep { label: String, reason: String },

    #[error("irrep set incomplete: sum of squared dimensions is {got}, group order is {order}")]
    IncompleteIrrepSet { got: usize, order: usize },

    #[error("not a Cayley function: value at `{0}` differs from value at its inverse")]
    NotCayleyFunction(String),

    #[error("not a class function: differs within a conjugacy class")]
    NotClassFunction,

    #[error("unknown block {0}")]
    UnknownBlock(usize),

    #[error("coefficient index ({i}, {j}) out of bounds for dimension {dim}")]
    CoefficientIndex { i: usize, j: usize, dim: usize },

    #[error("incomplete coefficient set: spectrum has a nonzero kernel and no residual is stored")]
    IncompleteBasis,

    #[error("io error: {0}")]
    Io(#[from] std::io::Error),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("json error: {0}")]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
