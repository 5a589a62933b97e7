//! Crossed modules over Lie and Leibniz algebras and their classifying
//! 3-cocycles.

mod leibniz;
mod lie;
mod morphism;
mod theta;
mod yoneda;

use thiserror::Error;

use crate::algebra::AlgebraError;
use crate::cohomology::CohomologyError;

pub use leibniz::{
    leibniz_choose_sections, leibniz_classify2, leibniz_theta, leibniz_theta_table, leibniz_yoneda_crossed_module,
    LeibnizCrossedModule, LeibnizInducedPair,
};
pub use lie::{CrossedModule, InducedPair};
pub use morphism::{check_crossed_morphism, CrossedMorphism};
pub use theta::{choose_sections, classify2, classify2_with, theta, theta_table, Sections, ThetaTable};
pub use yoneda::yoneda_crossed_module;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CrossedError {
    #[error("EQUIVARIANCE_FAIL({i},{j}): action of e{i} on v{j} does not commute with the map")]
    EquivarianceFail { i: usize, j: usize },
    #[error("PEIFFER_FAIL({i},{j})")]
    PeifferFail { i: usize, j: usize },
    #[error("SECTION_MISMATCH: {0}")]
    SectionMismatch(String),
    #[error("SQUARE_FAIL: square does not commute on v{j}")]
    SquareFail { j: usize },
    #[error("NOT_IDENTITY_ON_G: induced map moves basis vector {i} of g")]
    NotIdentityOnG { i: usize },
    #[error("NOT_IDENTITY_ON_M: induced map moves basis vector {i} of M")]
    NotIdentityOnM { i: usize },
    #[error("induced pair does not match: {0}")]
    Framing(String),
    #[error("shape error: {0}")]
    Shape(String),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error(transparent)]
    Cohomology(#[from] CohomologyError),
}
