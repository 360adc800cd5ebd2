//! Exact arithmetic: rationals, the quadratic field Q(√2), dense and sparse matrices.

mod matrix;
mod quad;
mod rational;
mod sparse;

pub use matrix::{axpy, combine, is_zero_vector, scale_vector, unit_vector, zero_vector, EchelonBasis, ExactMatrix, Rref, Vector};
pub use quad::QuadScalar;
pub use rational::{factorial, Rational};
pub use sparse::{apply_sum, apply_word, SparseMatrix};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ArithError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("cannot parse rational from {0:?}")]
    Parse(String),
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("matrix is {0}x{1}, expected square")]
    NotSquare(usize, usize),
    #[error("matrix is singular")]
    Singular,
    #[error("linear system has no solution")]
    Inconsistent,
}
