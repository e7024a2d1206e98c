use thiserror::Error;

/// Errors surfaced by the library.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("parse error on line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("self-loop on vertex {0}")]
    SelfLoop(u64),
    #[error("duplicate edge {0}-{1}")]
    DuplicateEdge(u64, u64),
    #[error("graph is disconnected")]
    Disconnected,
    #[error("graph is empty")]
    Empty,
    #[error("size cap exceeded: n = {n} > cap = {cap}")]
    CapExceeded { n: usize, cap: usize },
    #[error("class {0} is not a matching")]
    NotMatching(usize),
    #[error("deleting class {0} does not leave exactly two components")]
    NotTwoComponents(usize),
    #[error("edge {0} joins two vertices at the same distance from the basepoint")]
    NotBipartite(usize),
    #[error("two vertices share the in-class set {0:?}")]
    DuplicatePof(Vec<usize>),
    #[error("structure check failed: {0}")]
    NotMedian(String),
    #[error("graph is not a simplex graph")]
    NotSimplex,
    #[error("non-positive weight for entry {0}")]
    BadWeight(usize),
    #[error("invalid parameter: {0}")]
    Param(String),
}

pub type Result<T> = std::result::Result<T, Error>;
