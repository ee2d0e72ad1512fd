use thiserror::Error;

/// Errors raised by graph construction, the spectral routines, the bound
/// formulas and the generators.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("duplicate edge ({0}, {1})")]
    DuplicateEdge(usize, usize),
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("edge ({0}, {1}) is not present in the graph")]
    EdgeNotPresent(usize, usize),
    #[error("graph is not a tree")]
    NotATree,

    #[error("vector has length {got}, expected {expected}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("vector is constant; the quotient needs a nonconstant vector")]
    ConstantVector,
    #[error("the Laplacian of a graph with no vertices has no eigenvalues")]
    EmptyGraphDimension,
    #[error("relative tolerance {0} outside [1e-13, 1e-3]")]
    InvalidTolerance(f64),

    #[error("negative radicand {0}: degree profile is inconsistent")]
    NegativeRadicand(i128),
    #[error("lambda {lambda} outside [0, {n}]")]
    LambdaOutOfRange { lambda: f64, n: usize },
    #[error("cannot truncate negative value {0}")]
    NegativeInput(f64),

    #[error("cycle length {0} is below 3")]
    CycleTooShort(usize),
    #[error("{family} needs at least {min} vertices, got {got}")]
    SizeTooSmall {
        family: &'static str,
        min: usize,
        got: usize,
    },
    #[error("tree size {0} outside 1..=20")]
    SizeOutOfRange(usize),
    #[error("Pruefer entry {entry} out of range for {n} vertices")]
    EntryOutOfRange { entry: usize, n: usize },
    #[error("edge probability {0} outside [0, 1]")]
    InvalidProbability(f64),
}

pub type Result<T> = std::result::Result<T, Error>;
