//! Exact rational linear algebra: scalars, polynomials, dense matrices and
//! invariant-subspace closure.

pub mod matrix;
pub mod poly;
pub mod rational;
pub mod subspace;

pub use matrix::{anticommutator, commutator, Matrix, Rref, Vector};
pub use poly::{Polynomial, RootReport};
pub use rational::{int, parse_rational, rat, rational_sqrt, ParseRationalError, Rational};
pub use subspace::{spin, Subspace};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum LinalgError {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },
    #[error("operation undefined for the zero polynomial")]
    ZeroPolynomial,
    #[error("matrix is singular")]
    Singular,
}
