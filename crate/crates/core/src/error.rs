use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("variable count mismatch: {left} vs {right}")]
    VarCountMismatch { left: usize, right: usize },

    #[error("arity mismatch: expected {expected}, got {got}")]
    ArityMismatch { expected: usize, got: usize },

    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("zero vector is not a projective point")]
    ZeroVector,

    #[error("line endpoints are proportional")]
    DegenerateLine,

    #[error("invalid rational map: {0}")]
    InvalidMap(String),

    #[error("multiplication table is not commutative: b{i}*b{j} != b{j}*b{i}")]
    NotCommutative { i: usize, j: usize },

    #[error("unit law fails on basis element b{i}")]
    UnitLaw { i: usize },

    #[error("Jordan identity fails at x = {x}, y = {y}")]
    JordanIdentity { x: String, y: String },

    #[error("associativity fails on (b{i}, b{j}, b{k})")]
    NotAssociative { i: usize, j: usize, k: usize },

    #[error("composition property fails: {0}")]
    Composition(String),

    #[error("generic minimum polynomial could not be interpolated: {0}")]
    Interpolation(String),

    #[error("element is not invertible (norm vanishes)")]
    NotInvertible,

    #[error("algebra has rank {found}, operation needs rank {needed}")]
    WrongRank { needed: usize, found: usize },

    #[error("structural pair rejected at sample {sample}: {reason}")]
    StructuralCheckFailed { sample: String, reason: String },

    #[error("genericity failure: {0} is not invertible")]
    GenericityFailure(String),

    #[error("composite is not proportional to the identity: {0}")]
    NotProportional(String),

    #[error("degenerate secant query: {0}")]
    DegenerateQ(String),

    #[error("unknown catalog entry `{0}`")]
    UnknownAlgebra(String),

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("sampling budget exhausted: {0}")]
    RetryExhausted(String),

    #[error("parse error: {0}")]
    Parse(String),
}
