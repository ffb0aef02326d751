use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("loop arc ({0}, {0}) is not allowed")]
    LoopArc(usize),
    #[error("vertex {vertex} is out of range for a digraph of order {order}")]
    VertexOutOfRange { vertex: usize, order: usize },
    #[error("a digraph must have at least one vertex")]
    EmptyDigraph,
    #[error("digraphs are limited to {max} vertices, got {order}")]
    TooManyVertices { order: usize, max: usize },
    #[error("vertex set is empty")]
    EmptyVertexSet,
    #[error("expected two distinct vertices, got {0} twice")]
    SameVertex(usize),
    #[error("{what} requires order at least {required}, got {actual}")]
    OrderTooSmall {
        what: &'static str,
        required: usize,
        actual: usize,
    },
    #[error("vertex {0} already lies on the path")]
    VertexOnPath(usize),
    #[error("candidate set overlaps the path at vertex {0}")]
    CandidateOnPath(usize),
    #[error("invalid {kind}: {reason}")]
    InvalidWalk { kind: &'static str, reason: String },
    #[error("connectivity parameter k must be at least 1")]
    ZeroConnectivity,
    #[error("counting is limited to order {max}, got {order}; use the decision solvers instead")]
    TooLargeToCount { order: usize, max: usize },
    #[error("invalid arc probability {num}/{den}")]
    InvalidProbability { num: u32, den: u32 },
    #[error("no digraph satisfied the filter after {attempts} attempts")]
    FilterGaveUp { attempts: usize },
    #[error("unknown claim id `{0}`")]
    UnknownClaim(String),
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
}
