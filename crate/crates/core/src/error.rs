use thiserror::Error;

use crate::rational::Rational;

/// Malformed text input.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("invalid rational `{0}`")]
    Rational(String),
    #[error("graph6: {0}")]
    Graph6(String),
    #[error("edge list, line {line}: {msg}")]
    EdgeList { line: usize, msg: String },
    #[error("coloring, line {line}: {msg}")]
    Coloring { line: usize, msg: String },
    #[error("vertex values, line {line}: {msg}")]
    VertexValues { line: usize, msg: String },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error("graphs are limited to 62 vertices, got {0}")]
    TooManyVertices(usize),
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("duplicate edge {0}-{1}")]
    DuplicateEdge(usize, usize),
    #[error("unknown graph name `{0}`")]
    UnknownGraph(String),
    #[error("invalid size {size} for graph family `{family}`")]
    InvalidSize { family: String, size: usize },
    #[error("generator supports 1 <= n <= {max}, got {n}")]
    GeneratorRange { n: usize, max: usize },
    #[error("maximal independent set enumeration exceeded the cap of {cap} sets")]
    MisCapExceeded { cap: usize },
    #[error("vertex {vertex} has degree {degree}; the graph must be subcubic")]
    NotSubcubic { vertex: usize, degree: usize },
    #[error("expected {expected} per-vertex values, got {found}")]
    LengthMismatch { expected: usize, found: usize },
    #[error("demand {value} at vertex {vertex} is outside [0, 1]")]
    DemandOutOfRange { vertex: usize, value: Rational },
    #[error("operation needs a graph with at least one vertex")]
    EmptyGraph,
    #[error("LP value {0} exceeds 1, no (f,N)-coloring can be built from it")]
    ValueExceedsOne(Rational),
    #[error("LP solution does not cover the demand of vertex {0}")]
    DemandNotCovered(usize),
    #[error("support set {0:#x} is not independent")]
    NotIndependent(u64),
    #[error("{m} is not a multiple of {n}")]
    NotMultiple { m: usize, n: usize },
    #[error("{0} is not a common denominator of the demands")]
    NotCommonDenominator(usize),
    #[error("color {color} at vertex {vertex} is outside 1..={n_colors}")]
    ColorOutOfRange {
        vertex: usize,
        color: u32,
        n_colors: usize,
    },
    #[error("palette of {0} colors is too large for exhaustive search (max 128)")]
    PaletteTooLarge(usize),
    #[error("need a >= b >= 1, got a = {a}, b = {b}")]
    InvalidAb { a: usize, b: usize },
    #[error("path demands: {0}")]
    PathPrecondition(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
