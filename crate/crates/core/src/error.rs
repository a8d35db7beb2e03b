use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("loop at vertex {0}")]
    Loop(usize),
    #[error("parallel edge {0}-{1}")]
    ParallelEdge(usize, usize),
    #[error("graph is disconnected: vertex {0} unreachable from vertex 0")]
    Disconnected(usize),
    #[error("vertex {vertex} out of range for order {n}")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("graph has no vertices")]
    Empty,
    #[error("graph is a tree (no cycle)")]
    NoCycle,
    #[error("graph has {edges} edges on {n} vertices; not unicyclic")]
    NotUnicyclic { n: usize, edges: usize },
    #[error("general canonical labeling supports at most {max} vertices, got {n}")]
    TooLarge { n: usize, max: usize },
    #[error("index {index} out of range: {reason}")]
    IndexOutOfRange { index: usize, reason: String },
    #[error("edge {0}-{1} not in graph")]
    EdgeNotFound(usize, usize),
    #[error("invalid unicyclic spec: {0}")]
    InvalidSpec(String),
    #[error("bad parameters: {0}")]
    BadParams(String),
    #[error("precondition violated: {0}")]
    PreconditionViolated(String),
    #[error("no unicyclic graph of order {n} has diameter {d}")]
    EmptyClass { n: usize, d: usize },
    #[error("parse error: {0}")]
    Parse(String),
    #[error("i/o error: {0}")]
    Io(String),
}

impl Error {
    /// Stable machine-readable tag for reports.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::Loop(_) => "Loop",
            Error::ParallelEdge(..) => "ParallelEdge",
            Error::Disconnected(_) => "Disconnected",
            Error::VertexOutOfRange { .. } => "VertexOutOfRange",
            Error::Empty => "Empty",
            Error::NoCycle => "NoCycle",
            Error::NotUnicyclic { .. } => "NotUnicyclic",
            Error::TooLarge { .. } => "TooLarge",
            Error::IndexOutOfRange { .. } => "IndexOutOfRange",
            Error::EdgeNotFound(..) => "EdgeNotFound",
            Error::InvalidSpec(_) => "InvalidSpec",
            Error::BadParams(_) => "BadParams",
            Error::PreconditionViolated(_) => "PreconditionViolated",
            Error::EmptyClass { .. } => "EmptyClass",
            Error::Parse(_) => "Parse",
            Error::Io(_) => "Io",
        }
    }
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}
