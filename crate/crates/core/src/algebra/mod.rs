//! Lie and Leibniz algebras given by structure constants, together with their
//! modules and module morphisms.

pub mod catalog;
mod leibniz_module;
mod morphism;
mod representation;
mod structure;

use thiserror::Error;

pub use leibniz_module::{LeibnizAxiom, LeibnizModule};
pub use morphism::{LeibnizModuleMorphism, ModuleMorphism};
pub use representation::{adjoint, Representation};
pub use structure::{validate_leibniz, validate_lie, LeibnizAlgebra, LieAlgebra, StructureConstants};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum AlgebraError {
    #[error("ANTISYM_FAIL({i},{j}): [e{i},e{j}] != -[e{j},e{i}]")]
    AntisymFail { i: usize, j: usize },
    #[error("JACOBI_FAIL({i},{j},{k})")]
    JacobiFail { i: usize, j: usize, k: usize },
    #[error("LEIBNIZ_FAIL({i},{j},{k}): [x,[y,z]] != [[x,y],z] - [[x,z],y]")]
    LeibnizFail { i: usize, j: usize, k: usize },
    #[error("MODULE_AXIOM_FAIL({i},{j}): rho([e{i},e{j}]) != [rho(e{i}),rho(e{j})]")]
    ModuleAxiomFail { i: usize, j: usize },
    #[error("MODULE_AXIOM_FAIL({i},{j}): Leibniz module identity {axiom} fails")]
    LeibnizModuleAxiomFail { axiom: LeibnizAxiom, i: usize, j: usize },
    #[error("NOT_EQUIVARIANT({i}): map does not commute with the action of e{i}")]
    NotEquivariant { i: usize },
    #[error("NOT_LIE_MAP({i},{j})")]
    NotAHomomorphism { i: usize, j: usize },
    #[error("subspace is not an ideal")]
    NotAnIdeal,
    #[error("subspace is not a submodule")]
    NotASubmodule,
    #[error("modules are over different algebras")]
    AlgebraMismatch,
    #[error("field mismatch")]
    FieldMismatch,
    #[error("shape error: {0}")]
    Shape(String),
}
