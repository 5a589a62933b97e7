//! Exact cohomology of Lie and Leibniz algebras, crossed modules and their
//! 3-cocycles, and crossed n-fold extensions of modules.
//!
//! Everything is computed over `Q` or a prime field with exact scalars, so
//! every equality test below is an equality, not a tolerance check.

pub mod algebra;
pub mod cli;
pub mod cohomology;
pub mod crossed;
pub mod exactlin;
pub mod extensions;
