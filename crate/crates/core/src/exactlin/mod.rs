//! Exact linear algebra over ℚ and 𝔽_p.
//!
//! Everything downstream (kernels of coboundaries, cokernels of crossed
//! modules, sections, pushouts) is expressed with the handful of operations
//! here: [`kernel`], [`image`], [`quotient`], [`solve`] and [`linear_section`].
//! Subspaces are stored in reduced row-echelon form, which makes subspace
//! equality a plain data comparison.

mod linear_map;
mod matrix;
mod scalar;
mod sparse;
mod subspace;

pub use linear_map::{image, kernel, linear_section, quotient, solve, LinearMap, Quotient};
pub use matrix::{vector, Matrix, Rref};
pub use scalar::{Field, Modular, Rational, Scalar, ScalarError};
pub use sparse::SparseMatrix;
pub use subspace::Subspace;
