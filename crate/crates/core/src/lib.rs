//! Exact-arithmetic calculus for rational blow-downs.
//!
//! Everything in this crate computes over the rationals (or the Gaussian
//! rationals) with no floating point anywhere: invariants of 4-manifolds,
//! Hirzebruch-Jung continued fractions, cyclic quotient singularities of
//! class T, plumbing graphs, divisor arithmetic on ruled surfaces, and the
//! blow-down surgery bookkeeping that ties them together.
//!
//! Module map:
//!
//! - [`exactmath`] — rational and Gaussian-rational scalars, univariate
//!   polynomials, symmetric bilinear forms (inertia, determinants, solving).
//! - [`hj`] — Hirzebruch-Jung continued fractions, `C_{p,q}` strings and
//!   lens-space normal forms.
//! - [`singularities`] — cyclic quotient germs `1/r(a,b)`, class-T
//!   recognition, minimal resolutions and discrepancies.
//! - [`plumbing`] — plumbing graphs, a small text DSL, intersection
//!   matrices and boundary lens spaces.
//! - [`surfaces`] — divisor calculus on Hirzebruch surfaces, double-cover
//!   invariants, `E(n)` recognition.
//! - [`surgery`] — rational blow-down as arithmetic surgery on invariant
//!   records; geography checks; the `W_{4,n}` family.
//! - [`quotients`] — finite cyclic actions on curves in P1 x P1, fixed
//!   points, Burnside and holomorphic Lefschetz counts, the
//!   quotient-resolve pipeline.
//! - [`smoothing`] — diagnostics for the explicit Q-Gorenstein smoothing
//!   family of a class-T germ.
//! - [`oracle`] — independent re-implementations (resultants, brute-force
//!   classification) used to cross-check the main routes.

pub mod exactmath;
pub mod hj;
pub mod oracle;
pub mod plumbing;
pub mod quotients;
pub mod singularities;
pub mod smoothing;
pub mod surfaces;
pub mod surgery;

pub use exactmath::{GaussRational, Rational, SymMatrix, UniPoly};
pub use hj::{HjString, LensSpace};
pub use singularities::{CyclicQuotientType, ResolutionData, TClassification};
pub use surfaces::{FourManifoldInvariants, HirzebruchClass};
