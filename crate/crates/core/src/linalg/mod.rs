//! Exact arithmetic substrate: rationals, real quadratic fields, fraction-free
//! rank and determinants, exact solves, characteristic polynomials.

mod bareiss;
mod matrix;
mod poly;
mod scalar;

use thiserror::Error;

pub use matrix::ExactMatrix;
pub use poly::{char_poly, squarefree_decomposition, IntPolynomial, SquarefreeDecomposition};
pub use scalar::{ExactScalar, Field, QuadraticSurd};

pub(crate) use matrix::dot;
pub(crate) use scalar::is_squarefree;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LinalgError {
    #[error("cannot combine values from {left} and {right}")]
    MixedFields { left: Field, right: Field },
    #[error("division by zero")]
    DivisionByZero,
    #[error("matrix is singular")]
    SingularMatrix,
    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("the zero polynomial has no squarefree decomposition")]
    ZeroPolynomial,
    #[error("{0}")]
    Parse(String),
}
