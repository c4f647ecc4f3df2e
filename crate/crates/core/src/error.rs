use thiserror::Error;

/// Reasons a graph6 string can be rejected.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Graph6Error {
    #[error("empty input")]
    Empty,
    #[error("malformed size header at byte {offset}")]
    BadHeader { offset: usize },
    #[error("byte {byte:#04x} at offset {offset} is outside the printable graph6 range")]
    NonPrintable { offset: usize, byte: u8 },
    #[error("expected {expected} adjacency bytes, found {found}")]
    WrongLength { expected: usize, found: usize },
    #[error("nonzero padding bits in final byte at offset {offset}")]
    TrailingBits { offset: usize },
}

#[derive(Debug, Error)]
pub enum Error {
    #[error("vertex {vertex} out of range for graph of order {order}")]
    VertexOutOfRange { vertex: usize, order: usize },
    #[error("expected two distinct vertices, got {0} twice")]
    SameVertex(usize),
    #[error("vertex sets overlap")]
    OverlappingSets,
    #[error("vertex set of order {set} used with graph of order {graph}")]
    OrderMismatch { set: usize, graph: usize },
    #[error(transparent)]
    Graph6(#[from] Graph6Error),
    #[error("invalid argument: {0}")]
    Domain(String),
    #[error("order {order} exceeds the cap of {cap}")]
    CapExceeded { order: usize, cap: usize },
    #[error("internal invariant violated: {0}")]
    Invariant(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn domain<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::Domain(msg.into()))
}
