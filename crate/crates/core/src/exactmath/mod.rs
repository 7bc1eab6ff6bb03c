//! Exact scalar, polynomial and symmetric-bilinear-form arithmetic.
//!
//! All values are immutable after construction and every operation is a
//! pure function, so the whole module is safe to use from any number of
//! threads without coordination. Floating point is banned repo-wide;
//! every quantity is a [`Rational`], a [`GaussRational`] or an integer.

mod gauss;
mod matrix;
mod poly;
mod rational;

pub use gauss::GaussRational;
pub use matrix::{Inertia, SymMatrix};
pub use poly::{gauss_roots, FieldScalar, GaussPoly, RatPoly, UniPoly};
pub use rational::Rational;

use thiserror::Error;

/// Errors from exact-arithmetic operations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ExactError {
    /// A square-free test (or similar) was asked of the zero polynomial.
    #[error("operation undefined for the zero polynomial")]
    ZeroPolynomial,
    /// `solve_symmetric` was given a matrix with determinant zero.
    #[error("matrix is singular")]
    SingularMatrix,
    /// A matrix constructor received entries with `m[i][j] != m[j][i]`.
    #[error("entries are not symmetric at ({0}, {1})")]
    NotSymmetric(usize, usize),
    /// Row lengths do not match the declared dimension.
    #[error("matrix rows have inconsistent lengths")]
    RaggedRows,
    /// A polynomial over the Gaussian rationals has a factor of the given
    /// degree with no root in the field.
    #[error("polynomial does not split over the Gaussian rationals (irreducible factor of degree {0})")]
    IrreducibleFactor(usize),
}

/// Error for `FromStr` on [`Rational`] and [`GaussRational`].
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("invalid exact scalar literal: {0}")]
pub struct ParseExactError(pub String);
