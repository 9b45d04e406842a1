use thiserror::Error;

use crate::lattice::FaceId;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PolytopeError {
    #[error("no unique {0} face")]
    MissingBound(&'static str),
    #[error("cover {lower} < {upper} does not increase rank by exactly one")]
    RankSkip { lower: usize, upper: usize },
    #[error("face {0} is referenced but never declared")]
    UnknownFace(usize),
    #[error("face {face} has rank {rank}, outside -1..={max}")]
    RankOutOfRange { face: usize, rank: i32, max: i32 },
    #[error("flag {flag} has {found} faces of rank {rank} available for exchange, expected one")]
    DiamondViolation { flag: usize, rank: usize, found: usize },
    #[error("face {bottom} is not below face {top}")]
    NotComparable { bottom: FaceId, top: FaceId },
    #[error("facet {0} is not a simplex")]
    NotSimplicial(FaceId),
    #[error("polytope is not vertex-describable")]
    NotVertexDescribable,
    #[error("explicit 2^K needs {vertices} coordinates, above the threshold {threshold}")]
    TooLargeForExplicit { vertices: usize, threshold: usize },
    #[error("bad parameter: {0}")]
    BadParameter(String),
    #[error("not a polytope: {0}")]
    ValidationFailed(String),
    #[error("no asymmetric complex found after {attempts} attempts")]
    SearchExhausted { attempts: usize },
    #[error("invalid document: {0}")]
    InvalidDocument(String),
    #[error("count does not fit in 128 bits")]
    CountOverflow,
}

pub type Result<T> = std::result::Result<T, PolytopeError>;
