use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("elements live in different fields: {0} vs {1}")]
    FieldMismatch(String, String),
    #[error("{0} is not invertible (is the declared minimal polynomial irreducible?)")]
    InversionFailure(String),
    #[error("invalid field description: {0}")]
    InvalidField(String),
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("linear system has no solution")]
    NoSolution,
    #[error("matrix is singular")]
    SingularMatrix,
    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),
    #[error("bialgebra admits no antipode")]
    NoAntipode,
    #[error("characteristic obstruction: {0}")]
    CharacteristicObstruction(String),
    #[error("invalid group table: {0}")]
    InvalidGroup(String),
    #[error("incompatible field towers: {0}")]
    IncompatibleTowers(String),
    #[error("polynomial ring mismatch: {0}")]
    RingMismatch(String),
    #[error("operator is ill-defined: {0}")]
    IllDefined(String),
    #[error("Hopf algebra carries no product layout")]
    NotAProduct,
    #[error("point does not lie on the variety: {0}")]
    PointNotOnVariety(String),
    #[error("axiom hypotheses not satisfied: {0}")]
    ChecksNotPassed(String),
    #[error("variety is empty: the ideal contains 1")]
    EmptyVariety,
    #[error("basis is not good: {0}")]
    NotGoodBasis(String),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
