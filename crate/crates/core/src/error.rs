use thiserror::Error;

use crate::linalg::LinalgError;

#[derive(Debug, Error)]
pub enum Error {
    #[error(transparent)]
    Linalg(#[from] LinalgError),
    #[error("parse error at line {line}, column {column}: {message}")]
    Parse { line: usize, column: usize, message: String },
    #[error("invalid input: {0}")]
    Invalid(String),
    #[error("path complex is not regular: {0}")]
    NotRegular(String),
    #[error("vertex sets are not disjoint (shared: {})", .0.join(", "))]
    NonDisjointVertices(Vec<String>),
    #[error("budget exceeded: {what} needs {required} basis elements, budget is {budget}")]
    BudgetExceeded { what: String, required: u128, budget: u128 },
    #[error("chain complex is not exact at degree {0} (boundary of boundary is nonzero)")]
    ComplexNotExact(usize),
    #[error("internal inconsistency: {0}")]
    InternalInconsistency(String),
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
