use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("hypergraph has no hyperedges")]
    NoEdges,
    #[error("hyperedge {0} is empty")]
    EmptyEdge(usize),
    #[error("hyperedge {0} has a single vertex")]
    SingletonEdge(usize),
    #[error("vertex {0} has degree zero")]
    DanglingVertex(usize),
    #[error("vertex {vertex} out of range for {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("hyperedge {0} repeats an earlier hyperedge")]
    DuplicateEdge(usize),
    #[error("codegree requested for a vertex with itself ({0})")]
    SameVertex(usize),
    #[error("hypergraph is not uniform")]
    NotUniform,
    #[error("hypergraph is not regular")]
    NotRegular,
    #[error("input is not a simple graph (2-uniform hypergraph)")]
    NotAGraph,
    #[error("uniformity k = {0} is too small")]
    KTooSmall(usize),
    #[error("bad parameters: {0}")]
    BadParameters(String),
    #[error("labels: expected {expected}, got {got}")]
    LabelCount { expected: usize, got: usize },
    #[error("polynomial has a non-real root {re} + {im}i")]
    NonRealRoot { re: f64, im: f64 },
    #[error("polynomial has no nonzero coefficient")]
    ZeroPolynomial,
    #[error("cannot cancel {needed} roots, only {available} available")]
    CancellationImpossible { needed: usize, available: usize },
    #[error("invalid partition: {0}")]
    InvalidPartition(String),
    #[error("partition is not equitable: cell {p} row sums into cell {q} vary at vertex {vertex} (deviation {deviation:e})")]
    NotEquitable {
        p: usize,
        q: usize,
        vertex: usize,
        deviation: f64,
    },
    #[error("inputs are not cospectral: {0}")]
    NotCospectralInput(String),
    #[error("inputs are isomorphic")]
    InputsIsomorphic,
    #[error("interchange format: {0}")]
    Format(String),
}

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Self {
        Error::Format(e.to_string())
    }
}
