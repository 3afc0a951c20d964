use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("vertex {0} is out of range for a graph on {1} vertices")]
    VertexOutOfRange(usize, usize),
    #[error("{0} {1} is not an edge")]
    NotAnEdge(usize, usize),
    #[error("root list leaves vertex {0} unreachable")]
    UncoveredComponent(usize),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("malformed model: {0}")]
    MalformedModel(String),
    #[error("instance too large for exact minor search ({0})")]
    MinorSearchTooLarge(String),
    #[error("instance too large: {0}")]
    TooLarge(String),
    #[error("invalid tree decomposition: {0}")]
    InvalidDecomposition(String),
    #[error("infeasible: {0}")]
    Infeasible(String),
    #[error("weight overflow: total weight does not fit the objective range")]
    WeightOverflow,
    #[error("shift {shift}: decomposition width {width} exceeds cap {cap}")]
    ShiftWidthCap { shift: usize, width: usize, cap: usize },
    #[error("decomposition width {width} exceeds cap {cap}")]
    WidthCap { width: usize, cap: usize },
    #[error("boundary of {size} vertices exceeds cap {cap}")]
    BoundaryCap { size: usize, cap: usize },
    #[error("piece {piece} declared bipartite but has an odd cycle outside the boundary")]
    PieceKindMismatch { piece: usize },
    #[error("invalid bipartition: {0}")]
    InvalidBipartition(String),
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("io: {0}")]
    Io(String),
    #[error("json: {0}")]
    Json(String),
}

impl Error {
    /// True for errors that signal a configured size or width cap was hit.
    pub fn is_cap(&self) -> bool {
        matches!(
            self,
            Error::MinorSearchTooLarge(_)
                | Error::TooLarge(_)
                | Error::ShiftWidthCap { .. }
                | Error::WidthCap { .. }
                | Error::BoundaryCap { .. }
        )
    }
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Self {
        Error::Json(e.to_string())
    }
}
