//! Chevalley–Eilenberg and Leibniz cochain complexes with exact cohomology.
//!
//! Alternating cochains are indexed by increasing tuples in lexicographic
//! order, tensor cochains by all tuples in base-`d` order.

mod cochain;
mod complex;
mod extension;
mod groups;
mod sequence;
pub mod tuples;

use std::fmt;

use thiserror::Error;

use crate::algebra::AlgebraError;

pub use cochain::Cochain;
pub use complex::{
    apply_coboundary, ce_coboundary, ce_coboundary_matrix, leibniz_coboundary, leibniz_coboundary_matrix, Coefficients,
};
pub use extension::{
    abelian_extension_from_2cocycle, cohomologous_extension_map, extension_cocycle, extension_cocycle_with_section,
    leibniz_abelian_extension, pull_back_to_extension, AbelianExtension,
};
pub use groups::{
    boundaries, class_of, coboundary_witness, cocycles, cohomology, cohomology_table, h0_invariants, is_coboundary,
    total_cochain_dim, zero_class, CohomologyClass, CohomologyGroup,
};
pub use sequence::{
    connecting_cochain, connecting_hom, connecting_hom_with_lift, push_forward_class, push_forward_cochain,
    ShortExactSequence,
};

/// Default cap on computed degrees.
pub const DEFAULT_MAX_DEGREE: usize = 4;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Flavor {
    ChevalleyEilenberg,
    Leibniz,
}

impl fmt::Display for Flavor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Flavor::ChevalleyEilenberg => "ce",
            Flavor::Leibniz => "leibniz",
        })
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CohomologyError {
    #[error("NOT_A_COCYCLE: cochain of degree {degree} has nonzero coboundary")]
    NotACocycle { degree: usize },
    #[error("sequence is not exact: {0}")]
    NotExact(String),
    #[error("shape error: {0}")]
    Shape(String),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}
