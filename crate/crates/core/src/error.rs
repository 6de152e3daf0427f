use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("size limit exceeded: {what} = {value} (allowed {min}..={max})")]
    SizeLimit { what: &'static str, value: usize, min: usize, max: usize },

    #[error("arity mismatch: expected {expected}, got {got}")]
    Arity { expected: usize, got: usize },

    #[error("not multilinear: generator {0} occurs more than once")]
    Multilinearity(u8),

    #[error("unsupported degree {0}")]
    UnsupportedDegree(usize),

    #[error("rows are linearly dependent (rank {rank} < {rows})")]
    Rank { rank: usize, rows: usize },

    #[error("invalid permutation: {0:?}")]
    InvalidPermutation(Vec<u8>),

    #[error("relation is not in the kernel of the expansion map: {0}")]
    NotInKernel(String),

    #[error("precondition failed: {message} ({} violation(s))", violations.len())]
    Precondition { message: String, violations: Vec<crate::axioms::AxiomViolation<String>> },

    #[error("parse error: {0}")]
    Parse(String),

    #[error(transparent)]
    Json(#[from] serde_json::Error),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
