//! Exact linear algebra over Z, Q and Z_p.

mod echelon;
mod ring;
mod smith;
mod sparse;

pub use echelon::{column_echelon, kernel_basis, solve_in_span, ColumnEchelon, SpanSolver};
pub use ring::{is_prime, Euclidean, Integers, PrimeField, Rationals, Ring, RingSpec, MAX_PRIME};
pub use smith::{rank, smith_normal_form, SmithForm};
pub use sparse::{axpy, SparseMatrix, SparseVec};

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LinalgError {
    #[error("{0} is not a prime below 2^31")]
    NotPrime(u64),
    #[error("unrecognized ring `{0}` (expected Z, Q or Zp:<prime>)")]
    BadRingSyntax(String),
    #[error("target vector is not in the span of the basis")]
    NotInSpan,
    #[error("basis columns are linearly dependent")]
    DependentBasis,
    #[error("dimension mismatch: {0}")]
    Shape(String),
}
