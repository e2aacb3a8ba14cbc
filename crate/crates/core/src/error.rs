use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("vertex {0} is outside 1..={1}")]
    VertexOutOfRange(usize, usize),
    #[error("loop edge at vertex {0}")]
    LoopEdge(usize),
    #[error("graph is not connected")]
    Disconnected,
    #[error("{{{0},{1}}} is not an edge of the graph")]
    NotAnEdge(usize, usize),
    #[error("the two edges are equal")]
    EqualEdges,
    #[error("not an induced claw: {0}")]
    NotAClaw(String),
    #[error("unsupported graph shape: {0}")]
    Unsupported(String),
    #[error("graph is not in the family: {0}")]
    NotInFamily(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("polynomials live in different variable universes")]
    UniverseMismatch,
    #[error("variable {0} is not in the universe")]
    UnknownVariable(String),
    #[error("generator is not homogeneous: {0}")]
    NotHomogeneous(String),
    #[error("inconclusive: {0}")]
    Inconclusive(String),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

pub type Result<T> = std::result::Result<T, Error>;
