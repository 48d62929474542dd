use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid Coxeter label {0}: labels must be at least 2")]
    InvalidLabel(u32),
    #[error("matrix is {rows}x{cols}, expected a square matrix")]
    NotSquare { rows: usize, cols: usize },
    #[error("shape mismatch: {0}")]
    Shape(String),
    #[error("matrix is singular")]
    Singular,
    #[error("matrix has irrational entries")]
    NotRational,
    #[error("invalid Coxeter matrix: {0}")]
    InvalidCoxeterMatrix(String),
    #[error("invalid graph: {0}")]
    InvalidGraph(String),
    #[error("invalid subgraph operation: {0}")]
    InvalidSubgraph(String),
    #[error("invalid type label: {0}")]
    InvalidType(String),
    #[error("type {0} is not supported by this operation")]
    UnsupportedType(String),
    #[error("group order {order} exceeds the limit {limit}")]
    OrderTooLarge { order: u128, limit: u128 },
    #[error("argument {value} is outside the supported range {range}")]
    OutOfRange { value: usize, range: &'static str },
    #[error("elements belong to different groups")]
    GroupMismatch,
    #[error("not a subgroup: {0}")]
    NotSubgroup(String),
    #[error("class functions are defined on different class data")]
    ClassMismatch,
    #[error("defining relations fail: {0}")]
    RelationFailure(String),
    #[error("zero vector has no reflection")]
    ZeroVector,
    #[error("expected a non-negative integer multiplicity, got {0}")]
    NonIntegralMultiplicity(String),
    #[error("irreducible basis is incomplete: dimensions add to {found}, expected {expected}")]
    IncompleteBasis { found: String, expected: usize },
    #[error("internal inconsistency: {0}")]
    Inconsistent(String),
}
