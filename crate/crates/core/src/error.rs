use thiserror::Error;

/// Errors raised by complex construction, the vector transforms and the
/// property checks.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("vertex {0:?} appears twice in one facet")]
    DuplicateVertexInFacet(String),
    #[error("invalid vertex label {0:?}")]
    InvalidLabel(String),
    #[error("operation is undefined for the void complex")]
    VoidComplex,
    #[error("face {0} is not in the complex")]
    FaceNotInComplex(String),
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("refusing to enumerate complexes on {0} vertices (at most 5 supported)")]
    TooLarge(usize),
    #[error("complex has {0} vertices; at most 64 are supported")]
    TooManyVertices(usize),
    #[error("not the e-vector of any complex: {0}")]
    NotAnEVector(String),
    #[error("not the h-vector of any complex: {0}")]
    NotAnHVector(String),
    #[error("not a valid f-vector: {0}")]
    NotAnFVector(String),
    #[error("vector lengths disagree: expected d = {expected}, found d = {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("hypothesis not met: {0}")]
    HypothesisNotMet(String),
    #[error("internal inconsistency: {0}")]
    InternalInconsistency(String),
    #[error("parse error on line {line}: {message}")]
    Parse { line: usize, message: String },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
