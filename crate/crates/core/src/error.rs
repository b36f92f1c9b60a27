use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("point {point} out of range for {n} points")]
    PointOutOfRange { point: usize, n: usize },

    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),

    #[error("group too large: order exceeds enumeration cap {cap}")]
    GroupTooLarge { cap: usize },

    #[error("parse error on line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("{what}: size {size} exceeds cap {cap}{hint}")]
    CapExceeded {
        what: &'static str,
        size: usize,
        cap: usize,
        hint: &'static str,
    },

    #[error("automorphism search exceeded its budget of {budget} search nodes")]
    SearchBudget { budget: usize },

    #[error("graph is not trivially perfect")]
    NotTriviallyPerfect,

    #[error("chain decomposition of orbit has unequal chain lengths {lengths:?}")]
    UnequalChains { lengths: Vec<usize> },

    #[error("node {node} has weight zero; the addition operation requires nonzero weights")]
    ZeroWeight { node: usize },

    #[error("table does not match group: {0}")]
    TableMismatch(String),

    #[error("vector entry at position {position} is {value}, expected 0 or 1")]
    NotBinary { position: usize, value: i64 },

    #[error("sets are not path-disjoint: {0}")]
    NotPathDisjoint(String),

    #[error("recursion property violated: {0}")]
    RecursionProperty(String),

    #[error("invalid input: {0}")]
    InvalidInput(String),
}
