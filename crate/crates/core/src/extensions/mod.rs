//! Crossed n-fold extensions, pushouts of modules and the group structure on
//! equivalence classes of extensions.

mod extension;
mod morphism;
mod operations;
mod pushout;

use thiserror::Error;

use crate::algebra::AlgebraError;
use crate::cohomology::CohomologyError;
use crate::crossed::CrossedError;

pub use extension::CrossedExtension;
pub use morphism::{check_extension_morphism, ExtensionMorphism};
pub use operations::{
    baer_sum, baer_sum_n2, classify_n2, codiagonal, negate, opext_connecting, push_forward,
    push_forward_with_morphism, split_detect, sum_over_g, zero_extension, SplitWitness,
};
pub use pushout::{mediate, pushout, pushout_spaces, Pushout};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ExtensionError {
    #[error("COCONE_MISMATCH: j'g != i'f")]
    CoconeMismatch,
    #[error("EXACTNESS_FAIL({position})")]
    ExactnessFail { position: String },
    #[error("NOT_G_MODULE_MAP({i})")]
    NotGModuleMap { i: usize },
    #[error("BASE_NOT_CROSSED: {0}")]
    BaseNotCrossed(CrossedError),
    #[error("LENGTH_MISMATCH: {left} != {right}")]
    LengthMismatch { left: usize, right: usize },
    #[error("BASE_MISMATCH: {0}")]
    BaseMismatch(String),
    #[error("SQUARE_FAIL at {position}")]
    SquareFail { position: String },
    #[error("NOT_IDENTITY_ON_G")]
    NotIdentityOnG,
    #[error("operation not available for extensions of length {n}")]
    UnsupportedLength { n: usize },
    #[error("shape error: {0}")]
    Shape(String),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error(transparent)]
    Cohomology(#[from] CohomologyError),
    #[error(transparent)]
    Crossed(#[from] CrossedError),
}
