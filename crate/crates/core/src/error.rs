use thiserror::Error;

use crate::graph::{EdgeId, VertexId};

/// A violated structural invariant of a [`Network`](crate::Network) or of a
/// path system drawn on it.
///
/// Every variant has a stable kebab-case name (see [`GraphError::name`]) so
/// that tooling and fixtures can match on the failed invariant.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("edge {0} is a self-loop on vertex {1}")]
    SelfLoop(EdgeId, VertexId),
    #[error("edge {0} references unknown vertex {1}")]
    UnknownVertex(EdgeId, VertexId),
    #[error("unknown edge {0}")]
    UnknownEdge(EdgeId),
    #[error("duplicate vertex id {0}")]
    DuplicateVertex(VertexId),
    #[error("duplicate edge id {0}")]
    DuplicateEdge(EdgeId),
    #[error("source {1} has incoming edge {0}")]
    SourceIncomingEdge(EdgeId, VertexId),
    #[error("sink {1} has outgoing edge {0}")]
    SinkOutgoingEdge(EdgeId, VertexId),
    #[error("edge {0} touches a terminal but is undirected")]
    TerminalEdgeUndirected(EdgeId),
    #[error("edge {0} joins two interior vertices but is directed")]
    InteriorEdgeDirected(EdgeId),
    #[error("pair {0} has source equal to sink")]
    DegeneratePair(usize),
    #[error("vertex {0} is used as a terminal more than once")]
    SharedTerminal(VertexId),
    #[error("pair {0} has demand 0")]
    ZeroDemand(usize),
    #[error("pair index {0} out of range")]
    NoSuchPair(usize),
    #[error("path step on edge {0} does not continue from vertex {1}")]
    BrokenPath(EdgeId, VertexId),
    #[error("path traverses directed edge {0} backwards")]
    AgainstDirection(EdgeId),
    #[error("path revisits vertex {0}")]
    NonSimplePath(VertexId),
    #[error("path of pair {0} does not run from its source to its sink")]
    WrongEndpoints(usize),
    #[error("paths of pair {0} share vertex {1}")]
    PathsIntersect(usize, VertexId),
    #[error("system for pair {0} uses edge {1} more than once")]
    RepeatedEdge(usize, EdgeId),
    #[error("system for pair {pair} has {got} paths, demand is {demand}")]
    WrongPathCount { pair: usize, got: usize, demand: u32 },
    #[error("expected {expected} path systems, got {got}")]
    SystemCount { expected: usize, got: usize },
    #[error("empty path")]
    EmptyPath,
}

impl GraphError {
    /// Stable name of the violated invariant.
    pub fn name(&self) -> &'static str {
        match self {
            GraphError::SelfLoop(..) => "self-loop",
            GraphError::UnknownVertex(..) => "unknown-vertex",
            GraphError::UnknownEdge(..) => "unknown-edge",
            GraphError::DuplicateVertex(..) => "duplicate-vertex",
            GraphError::DuplicateEdge(..) => "duplicate-edge",
            GraphError::SourceIncomingEdge(..) => "source-incoming-edge",
            GraphError::SinkOutgoingEdge(..) => "sink-outgoing-edge",
            GraphError::TerminalEdgeUndirected(..) => "terminal-edge-undirected",
            GraphError::InteriorEdgeDirected(..) => "interior-edge-directed",
            GraphError::DegeneratePair(..) => "degenerate-pair",
            GraphError::SharedTerminal(..) => "shared-terminal",
            GraphError::ZeroDemand(..) => "zero-demand",
            GraphError::NoSuchPair(..) => "no-such-pair",
            GraphError::BrokenPath(..) => "broken-path",
            GraphError::AgainstDirection(..) => "against-direction",
            GraphError::NonSimplePath(..) => "non-simple-path",
            GraphError::WrongEndpoints(..) => "wrong-endpoints",
            GraphError::PathsIntersect(..) => "paths-intersect",
            GraphError::RepeatedEdge(..) => "repeated-edge",
            GraphError::WrongPathCount { .. } => "wrong-path-count",
            GraphError::SystemCount { .. } => "system-count",
            GraphError::EmptyPath => "empty-path",
        }
    }
}

/// Failure to read a network document.
#[derive(Debug, Error)]
pub enum ParseError {
    #[error("line {line}, column {column}: {message}")]
    Syntax {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("field `{field}`: {source}")]
    Invariant {
        field: &'static str,
        #[source]
        source: GraphError,
    },
}

impl ParseError {
    /// The failed invariant name, when the document was well-formed JSON but
    /// described an invalid network.
    pub fn invariant(&self) -> Option<&'static str> {
        match self {
            ParseError::Invariant { source, .. } => Some(source.name()),
            ParseError::Syntax { .. } => None,
        }
    }
}

/// Top-level error for operations that span modules.
#[derive(Debug, Error)]
pub enum Error {
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error("not-in-class: {0}")]
    NotInClass(String),
    #[error("{0}")]
    OutOfContract(String),
    #[error(transparent)]
    Representation(#[from] crate::representation::RepresentationError),
    #[error(transparent)]
    Interconnect(#[from] crate::interconnect::InterconnectError),
    #[error(transparent)]
    Oracle(#[from] crate::oracle::OracleError),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
