use thiserror::Error;

/// Errors produced by the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("matrix dimensions must be positive, got {rows}x{cols}")]
    EmptyMatrix { rows: usize, cols: usize },

    #[error("expected {expected} entries for a {rows}x{cols} matrix, got {found}")]
    EntryCount {
        rows: usize,
        cols: usize,
        expected: usize,
        found: usize,
    },

    #[error("ragged rows: row {row} has {found} entries, expected {expected}")]
    RaggedRows {
        row: usize,
        expected: usize,
        found: usize,
    },

    #[error("index {index} out of range 1..={bound}")]
    IndexOutOfRange { index: usize, bound: usize },

    #[error("index set must be nonempty and strictly increasing: {0:?}")]
    InvalidIndexSet(Vec<usize>),

    #[error("index sets differ in size: {rows} rows vs {cols} columns")]
    SizeMismatch { rows: usize, cols: usize },

    #[error("invalid index ordering: {0}")]
    IndexOrdering(String),

    #[error("division by zero")]
    DivisionByZero,

    #[error("weight matrix entry ({row},{col}) is not strictly positive")]
    NonPositiveWeight { row: usize, col: usize },

    #[error(
        "zero pivot at ({row},{col}) in Cauchon's algorithm; the matrix is not totally positive"
    )]
    ZeroPivot { row: usize, col: usize },

    #[error("scaffolding entry ({row},{col}) is not positive; the matrix is not totally positive")]
    NonPositiveScaffold { row: usize, col: usize },

    #[error("matrix is not totally positive")]
    NotTotallyPositive,

    #[error("{what} is too large for exhaustive enumeration ({detail})")]
    TooLarge { what: &'static str, detail: String },

    #[error("path does not belong to the graph: {0}")]
    MalformedPath(String),

    #[error("orientation not supported here: {0}")]
    UnsupportedOrientation(&'static str),

    #[error("insertion position k={k} must satisfy 1 <= k <= {max}")]
    InsertionPosition { k: usize, max: usize },

    #[error("expected a vector of length {expected}, got {found}")]
    VectorLength { expected: usize, found: usize },

    #[error("border parameter {index} is not strictly positive")]
    NonPositiveParameter { index: usize },

    #[error("candidate solution rejected: {0}")]
    InvalidCandidate(String),

    #[error("internal consistency failure: {0}")]
    Inconsistent(String),
}

pub type Result<T> = std::result::Result<T, Error>;
