use std::sync::Arc;

use crate::exactlin::{image, kernel, quotient, vector, Field, LinearMap, Matrix, Quotient, Scalar, Subspace};

use super::{AlgebraError, LieAlgebra};

/// A module over a Lie algebra: `action[i]` is the matrix of `m ↦ [e_i, m]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Representation {
    algebra: Arc<LieAlgebra>,
    dim: usize,
    action: Vec<Matrix>,
}

impl Representation {
    /// Validates `ρ([e_i,e_j]) = ρ(e_i)ρ(e_j) − ρ(e_j)ρ(e_i)` on all basis pairs.
    pub fn new(algebra: Arc<LieAlgebra>, dim: usize, action: Vec<Matrix>) -> Result<Self, AlgebraError> {
        let rep = Self::new_unchecked(algebra, dim, action)?;
        rep.validate()?;
        Ok(rep)
    }

    /// Shape checks only.
    pub fn new_unchecked(algebra: Arc<LieAlgebra>, dim: usize, action: Vec<Matrix>) -> Result<Self, AlgebraError> {
        if action.len() != algebra.dim() {
            return Err(AlgebraError::Shape(format!(
                "expected {} action matrices, got {}",
                algebra.dim(),
                action.len()
            )));
        }
        for a in &action {
            if a.rows() != dim || a.cols() != dim {
                return Err(AlgebraError::Shape(format!("action matrix must be {dim}x{dim}")));
            }
            if a.field() != algebra.field() {
                return Err(AlgebraError::FieldMismatch);
            }
        }
        Ok(Representation { algebra, dim, action })
    }

    pub fn validate(&self) -> Result<(), AlgebraError> {
        let d = self.algebra.dim();
        for i in 0..d {
            for j in 0..d {
                let lhs = self.act(self.algebra.bracket_basis(i, j));
                let rhs = self.action[i].mul(&self.action[j]).sub(&self.action[j].mul(&self.action[i]));
                if lhs != rhs {
                    return Err(AlgebraError::ModuleAxiomFail { i, j });
                }
            }
        }
        Ok(())
    }

    pub fn trivial(algebra: Arc<LieAlgebra>, dim: usize) -> Self {
        let field = algebra.field();
        let action = vec![Matrix::zeros(field, dim, dim); algebra.dim()];
        Representation { algebra, dim, action }
    }

    pub fn algebra(&self) -> &Arc<LieAlgebra> {
        &self.algebra
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn field(&self) -> Field {
        self.algebra.field()
    }

    pub fn action(&self, i: usize) -> &Matrix {
        &self.action[i]
    }

    pub fn actions(&self) -> &[Matrix] {
        &self.action
    }

    /// `ρ(x) = Σ x_i ρ(e_i)`.
    pub fn act(&self, x: &[Scalar]) -> Matrix {
        let mut out = Matrix::zeros(self.field(), self.dim, self.dim);
        for (xi, a) in x.iter().zip(&self.action) {
            if !xi.is_zero() {
                out = out.add(&a.scale(xi));
            }
        }
        out
    }

    /// `[x, m]`
    pub fn act_on(&self, x: &[Scalar], m: &[Scalar]) -> Vec<Scalar> {
        let mut out = vector::zeros(self.field(), self.dim);
        for (xi, a) in x.iter().zip(&self.action) {
            if !xi.is_zero() {
                vector::axpy(&mut out, xi, &a.apply(m));
            }
        }
        out
    }

    /// Whether every action matrix vanishes.
    pub fn is_trivial(&self) -> bool {
        self.action.iter().all(Matrix::is_zero)
    }

    pub fn direct_sum(&self, other: &Representation) -> Result<Representation, AlgebraError> {
        if self.algebra != other.algebra {
            return Err(AlgebraError::AlgebraMismatch);
        }
        let action = self.action.iter().zip(&other.action).map(|(a, b)| a.block_diag(b)).collect();
        Ok(Representation { algebra: self.algebra.clone(), dim: self.dim + other.dim, action })
    }

    /// Restriction along a Lie map `f: h → g`.
    pub fn pullback(&self, h: Arc<LieAlgebra>, f: &LinearMap) -> Result<Representation, AlgebraError> {
        h.check_homomorphism(f, &self.algebra)?;
        let action = (0..h.dim()).map(|i| self.act(&f.image_of_basis(i))).collect();
        Ok(Representation { algebra: h, dim: self.dim, action })
    }

    /// The same action with the algebra replaced by an identical copy (used
    /// when two algebra handles compare equal but are distinct allocations).
    pub fn with_algebra(&self, algebra: Arc<LieAlgebra>) -> Result<Representation, AlgebraError> {
        if *algebra != *self.algebra {
            return Err(AlgebraError::AlgebraMismatch);
        }
        Ok(Representation { algebra, dim: self.dim, action: self.action.clone() })
    }

    /// The dual module: `ρ*(x) = −ρ(x)ᵀ`.
    pub fn dual(&self) -> Representation {
        let m1 = -self.field().one();
        let action = self.action.iter().map(|a| a.transpose().scale(&m1)).collect();
        Representation { algebra: self.algebra.clone(), dim: self.dim, action }
    }

    /// Coordinates in the basis given by the columns of `p`.
    pub fn change_basis(&self, p: &Matrix) -> Result<Representation, AlgebraError> {
        let inv = p
            .inverse()
            .ok_or_else(|| AlgebraError::Shape("basis change matrix is singular".into()))?;
        let action = self.action.iter().map(|a| inv.mul(a).mul(p)).collect();
        Ok(Representation { algebra: self.algebra.clone(), dim: self.dim, action })
    }

    pub fn is_submodule(&self, sub: &Subspace) -> bool {
        sub.basis_vectors()
            .iter()
            .all(|v| self.action.iter().all(|a| sub.contains(&a.apply(v))))
    }

    /// Submodule in the RREF basis of `sub`, with its inclusion.
    pub fn submodule(&self, sub: &Subspace) -> Result<(Representation, LinearMap), AlgebraError> {
        if !self.is_submodule(sub) {
            return Err(AlgebraError::NotASubmodule);
        }
        let basis = sub.basis_vectors();
        let inclusion = LinearMap::from_images(self.field(), self.dim, &basis);
        let action = self
            .action
            .iter()
            .map(|a| {
                let cols: Vec<Vec<Scalar>> = basis
                    .iter()
                    .map(|v| sub.coordinates(&a.apply(v)).expect("submodule is invariant"))
                    .collect();
                Matrix::from_columns(self.field(), basis.len(), &cols)
            })
            .collect();
        Ok((Representation { algebra: self.algebra.clone(), dim: basis.len(), action }, inclusion))
    }

    /// Quotient module in the canonical quotient basis.
    pub fn quotient_module(&self, sub: &Subspace) -> Result<(Representation, Quotient), AlgebraError> {
        if !self.is_submodule(sub) {
            return Err(AlgebraError::NotASubmodule);
        }
        let q = quotient(self.dim, sub);
        let action = self
            .action
            .iter()
            .map(|a| LinearMap::new(a.clone()))
            .map(|a| q.projection.compose(&a).compose(&q.section).into_matrix())
            .collect();
        Ok((Representation { algebra: self.algebra.clone(), dim: q.dim, action }, q))
    }

    /// `{ m : [x, m] = 0 for all x }`
    pub fn invariants(&self) -> Subspace {
        let field = self.field();
        let stacked = self
            .action
            .iter()
            .fold(Matrix::zeros(field, 0, self.dim), |acc, a| acc.vstack(a));
        kernel(&LinearMap::new(stacked))
    }

    /// `span{ [x, m] }`
    pub fn augmentation(&self) -> Subspace {
        let field = self.field();
        let wide = self
            .action
            .iter()
            .fold(Matrix::zeros(field, self.dim, 0), |acc, a| acc.hstack(a));
        image(&LinearMap::new(wide))
    }
}

/// The adjoint module: `e_i` acts by the matrix of `[e_i, −]`.
pub fn adjoint(g: &Arc<LieAlgebra>) -> Representation {
    let action = (0..g.dim()).map(|i| g.left_mult(i)).collect();
    Representation { algebra: g.clone(), dim: g.dim(), action }
}
