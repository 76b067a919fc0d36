//! Exact-arithmetic kernel for a Z-graded Lie superalgebra extending W(2,2)
//! by an odd part.
//!
//! The crate provides, over the Gaussian rationals:
//! - the superbracket with window-based verification of super-skew-symmetry,
//!   the graded Jacobi identity, and generation closure ([`algebra`]);
//! - intermediate-series weight modules with pluggable coefficient tables and
//!   a graded module-axiom checker ([`repmod`]);
//! - exact assembly and nullspace solving of the coefficient functional
//!   equations, with a quadratic-relation filter that reproduces the
//!   trivial-action classification ([`classify`]);
//! - the two classified conjugate-linear anti-involution families, their
//!   axiom checker, and a diagonal unitary-form solver ([`involution`]).

pub mod algebra;
pub mod classify;
pub mod involution;
pub mod matrix;
pub mod parser;
pub mod repmod;
pub mod report;
pub mod scalar;

pub use algebra::{bracket, Element, Family, GeneratorId};
pub use scalar::Scalar;
