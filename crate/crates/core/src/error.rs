use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("vertex index {vertex} out of range for graph with {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("index {index} out of range (expected < {bound})")]
    IndexOutOfRange { index: usize, bound: usize },

    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),

    #[error("edge ({0}, {1}) is not present")]
    EdgeNotPresent(usize, usize),

    #[error("vertex count mismatch: {left} vs {right}")]
    VertexCountMismatch { left: usize, right: usize },

    #[error("vertex set is empty")]
    EmptySet,

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("parse error at line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("malformed input: {0}")]
    Malformed(String),

    #[error("invalid eigenbasis: {0}")]
    InvalidBasis(String),

    #[error("translation at vertex {vertex} is not invertible; eigenvectors vanishing there: {vanishing:?}")]
    NotInvertible { vertex: usize, vanishing: Vec<usize> },

    #[error("multiplier symbol vanishes at indices {0:?}")]
    NonInvertibleSymbol(Vec<usize>),

    #[error("graph is disconnected (algebraic connectivity {0:e} within tolerance of zero)")]
    Disconnected(f64),

    #[error("operation requires a real-valued eigenbasis")]
    ComplexBasis,

    #[error("cubic discriminant is not positive ({0:e})")]
    NonPositiveDiscriminant(f64),

    #[error("eigenpair residual {residual:e} exceeds bound {bound:e}")]
    ResidualTooLarge { residual: f64, bound: f64 },

    #[error("eigenvalues differ: {0} vs {1}")]
    EigenvalueMismatch(f64, f64),

    #[error("connecting edge endpoint (graph {graph}, vertex {vertex}) has nonzero value {value:e}")]
    ConnectingVertexNotZero { graph: usize, vertex: usize, value: f64 },

    #[error("connecting edge joins graph {0} to itself")]
    ConnectingEdgeWithinGraph(usize),

    #[error("connecting edge set is empty")]
    EmptyConnectingSet,

    #[error("boundary edge ({inside}, {outside}) leaves S at a vertex with nonzero value {value:e}")]
    BoundaryNotZero { inside: usize, outside: usize, value: f64 },

    #[error("unknown graph family '{0}'")]
    UnknownFamily(String),
}

pub type Result<T> = std::result::Result<T, Error>;
