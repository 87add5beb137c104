use thiserror::Error;

/// Errors produced by the engine.
///
/// Indices carried in error values are 1-based, matching the external
/// conventions of the graph format and the CLI.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("too few vertices for a {shape}: got {got}, need at least {min}")]
    TooFewVertices {
        shape: &'static str,
        got: usize,
        min: usize,
    },
    #[error("sign value {0} is not +1 or -1")]
    InvalidSign(i64),
    #[error("malformed graph document: {0}")]
    MalformedGraph(String),
    #[error("edge ({i},{j}) listed more than once")]
    DuplicateEdge { i: usize, j: usize },
    #[error("coxeter matrix is not symmetric at ({i},{j})")]
    Asymmetric { i: usize, j: usize },
    #[error("edge label m={m} at ({i},{j}) is outside the simply-laced range {{2,3}}")]
    NotSimplyLaced { i: usize, j: usize, m: i64 },
    #[error("index {index} is out of range for {n} generators")]
    IndexOutOfRange { index: usize, n: usize },
    #[error("dimension mismatch: {left} vs {right}")]
    DimensionMismatch { left: usize, right: usize },
    #[error("operation requires a {expected} graph")]
    WrongShape { expected: &'static str },
    #[error("invalid parameters: {0}")]
    InvalidParameters(String),
    #[error("hypothesis violated: {0}")]
    HypothesisViolated(String),
    #[error("matrix is not invertible over the integers (det = {0})")]
    NotUnimodular(String),
    #[error("evaluation point (x={x}, alpha={alpha}) is not supported by the zero search")]
    UnsupportedDicksonPoint { x: i64, alpha: i64 },
    #[error("zero search reached its bound without a decision for (x={x}, alpha={alpha})")]
    UndecidedZeroSearch { x: i64, alpha: i64 },
    #[error("unknown format `{0}`")]
    UnknownFormat(String),
    #[error("malformed presentation document: {0}")]
    MalformedPresentation(String),
}

pub type Result<T> = std::result::Result<T, Error>;
