//! Exact computation of the Lie algebra g(A) = {X : X*A + A*X^T = 0}.
//!
//! Everything runs over the Gaussian rationals, so every identity asserted
//! by this crate is checked with zero tolerance. The main pieces:
//!
//! - [`scalar`], [`matrix`], [`rref`]: exact dense linear algebra, reduced
//!   row echelon form, canonical null-space bases, Kronecker products, and
//!   the commutation matrix.
//! - [`canonical`]: Jordan blocks J_n(mu), Type-II blocks H_2n(mu), and the
//!   cosquare H * H^(-T).
//! - [`pascal`]: the Pascal-triangle matrix Delta_n, its reflection inverse,
//!   and the similarity/transpose identities it satisfies when mu = (-1)^n.
//! - [`solver`]: the closed-form basis of g(H_2n(mu)), covering both the
//!   generic case (dimension n) and mu = (-1)^n (dimension n + 2*ceil(n/2)).
//! - [`oracle`]: an independent brute-force kernel solver for arbitrary
//!   square A via Kronecker vectorization; ground truth for the closed form.
//! - [`lie`]: brackets, closure checking, and structure constants.
//! - [`json`]: deterministic JSON interchange for matrices, bases, and
//!   structure constants.
//! - [`verify`]: the bundled invariant suites run by the CLI.

pub mod canonical;
pub mod error;
pub mod json;
pub mod lie;
pub mod matrix;
pub mod oracle;
pub mod pascal;
pub mod rref;
pub mod scalar;
pub mod solver;
pub mod verify;

pub use canonical::CanonicalSpec;
pub use error::Error;
pub use matrix::Matrix;
pub use scalar::{Rational, Scalar};
pub use solver::{BasisRole, SolutionBasis};
