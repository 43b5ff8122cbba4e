use thiserror::Error;

use crate::embedding::{EdgeId, FaceId, VertexId};

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("malformed rotation: {0}")]
    MalformedRotation(String),
    #[error("rotation system is not planar: V - E + F = {euler} (expected 2)")]
    NonPlanarRotation { euler: i64 },
    #[error("graph is not simple: {0}")]
    NotSimple(String),
    #[error("graph is not connected")]
    Disconnected,
    #[error("outer face not found: {0}")]
    OuterFaceNotFound(String),

    #[error("face {face} has length {len}, expected a 4-cycle of distinct vertices")]
    NonQuadFace { face: FaceId, len: usize },
    #[error("graph is not bipartite (edge {0} joins two vertices of the same color)")]
    NotBipartite(EdgeId),
    #[error("graph is not 3-connected")]
    Not3Connected,
    #[error("faces {first} and {second} induce the same diagonal ({u}, {v})")]
    DuplicateDiagonal {
        first: FaceId,
        second: FaceId,
        u: VertexId,
        v: VertexId,
    },
    #[error("input is not an optimal 1-plane graph: {0}")]
    NotOptimal(String),

    #[error("book embedding construction failed: {0}")]
    EmbeddingFailed(String),
    #[error("invalid book embedding: {0}")]
    InvalidBook(String),
    #[error("face {0} has a spine color pattern that no compliant embedding produces")]
    UnclassifiableFace(FaceId),
    #[error("dolphin face {0} has its middle corners separated on the spine")]
    DolphinGapViolation(FaceId),

    #[error("coloring references an edge that is not in the graph: {0}")]
    ForeignEdge(String),
    #[error("instance has {faces} faces, over the enumeration budget of {budget}")]
    TooLarge { faces: usize, budget: usize },
    #[error("graph is not a grid-family instance: {0}")]
    NotGridFamily(String),
    #[error("generation failed: {0}")]
    GenerationFailed(String),
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("parse error at line {line}: {message}")]
    Parse { line: usize, message: String },
}

impl Error {
    pub(crate) fn parse(line: usize, message: impl Into<String>) -> Self {
        Error::Parse {
            line,
            message: message.into(),
        }
    }
}
