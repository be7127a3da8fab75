use thiserror::Error;

use crate::graph::{Time, Vertex};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("self-loop at vertex {vertex}")]
    SelfLoop { vertex: Vertex },
    #[error("vertex {vertex} out of range for n = {n}")]
    VertexOutOfRange { vertex: Vertex, n: usize },
    #[error("label {label} outside [1, {tau}]")]
    LabelOutOfRange { label: Time, tau: Time },
    #[error("traversal time must be positive")]
    ZeroTraversal,
}

/// Malformed text input, with the 1-based line number where it was detected.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}: {message}")]
pub struct ParseError {
    pub line: usize,
    pub message: String,
}

impl ParseError {
    pub(crate) fn new(line: usize, message: impl Into<String>) -> Self {
        ParseError { line, message: message.into() }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SolveError {
    #[error("source and sink must be distinct vertices below n = {n} (got {s}, {z})")]
    BadTerminals { s: Vertex, z: Vertex, n: usize },
    #[error("instance has {n} vertices; exhaustive search is limited to {limit}")]
    TooLarge { n: usize, limit: usize },
    #[error("maximum label {tau} exceeds 4 after normalization; use an exact solver instead")]
    TauTooLarge { tau: Time },
    #[error("temporal core has {size} vertices, above the limit of {limit}")]
    CoreTooLarge { size: usize, limit: usize },
    #[error("this solver only handles the {expected} model")]
    WrongModel { expected: &'static str },
    #[error("graph is not reduced: {reason}")]
    NotReduced { reason: String },
    #[error("s and z are adjacent; no vertex separator exists")]
    Inseparable,
    #[error("internal check failed: {0}")]
    Internal(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GeneratorError {
    #[error("budget k = {0} must be even")]
    OddBudget(usize),
    #[error("vertex {vertex} has degree {degree}, above the limit of {limit}")]
    DegreeTooHigh { vertex: Vertex, degree: usize, limit: usize },
    #[error("terminal {vertex} must have degree 3, has {degree}")]
    TerminalDegree { vertex: Vertex, degree: usize },
    #[error("edge {edge} has cost {cost}; costs must be 1 or k+1")]
    BadCost { edge: usize, cost: usize },
    #[error("rotation system is inconsistent: {0}")]
    BadRotation(String),
    #[error("rotation system is not planar ({faces} faces, Euler needs {expected})")]
    NotPlanar { faces: usize, expected: usize },
    #[error("invalid parameter: {0}")]
    Parameter(String),
    #[error(transparent)]
    Graph(#[from] GraphError),
}
