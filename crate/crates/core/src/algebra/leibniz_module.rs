use std::fmt;
use std::sync::Arc;

use crate::exactlin::{kernel, quotient, vector, Field, LinearMap, Matrix, Quotient, Scalar, Subspace};

use super::{AlgebraError, LeibnizAlgebra, Representation};

/// The three mixed identities a Leibniz module must satisfy.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum LeibnizAxiom {
    /// `[m,[x,y]] = [[m,x],y] − [[m,y],x]`
    Mll,
    /// `[x,[m,y]] = [[x,m],y] − [[x,y],m]`
    Lml,
    /// `[x,[y,m]] = [[x,y],m] − [[x,m],y]`
    Llm,
}

impl fmt::Display for LeibnizAxiom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            LeibnizAxiom::Mll => "[m,[x,y]] = [[m,x],y] - [[m,y],x]",
            LeibnizAxiom::Lml => "[x,[m,y]] = [[x,m],y] - [[x,y],m]",
            LeibnizAxiom::Llm => "[x,[y,m]] = [[x,y],m] - [[x,m],y]",
        };
        f.write_str(s)
    }
}

/// A module over a Leibniz algebra with explicit left actions
/// `left[i]: m ↦ [e_i, m]` and right actions `right[i]: m ↦ [m, e_i]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LeibnizModule {
    algebra: Arc<LeibnizAlgebra>,
    dim: usize,
    left: Vec<Matrix>,
    right: Vec<Matrix>,
}

impl LeibnizModule {
    pub fn new(
        algebra: Arc<LeibnizAlgebra>,
        dim: usize,
        left: Vec<Matrix>,
        right: Vec<Matrix>,
    ) -> Result<Self, AlgebraError> {
        let m = Self::new_unchecked(algebra, dim, left, right)?;
        m.validate()?;
        Ok(m)
    }

    pub fn new_unchecked(
        algebra: Arc<LeibnizAlgebra>,
        dim: usize,
        left: Vec<Matrix>,
        right: Vec<Matrix>,
    ) -> Result<Self, AlgebraError> {
        let d = algebra.dim();
        if left.len() != d || right.len() != d {
            return Err(AlgebraError::Shape(format!("expected {d} left and {d} right action matrices")));
        }
        for a in left.iter().chain(&right) {
            if a.rows() != dim || a.cols() != dim {
                return Err(AlgebraError::Shape(format!("action matrix must be {dim}x{dim}")));
            }
            if a.field() != algebra.field() {
                return Err(AlgebraError::FieldMismatch);
            }
        }
        Ok(LeibnizModule { algebra, dim, left, right })
    }

    /// Checks the identities for basis `x = e_i`, `y = e_j`, in the order
    /// MLL, LML, LLM for each pair.
    pub fn validate(&self) -> Result<(), AlgebraError> {
        let d = self.algebra.dim();
        for i in 0..d {
            for j in 0..d {
                let c = self.algebra.bracket_basis(i, j);
                let (li, lj, ri, rj) = (&self.left[i], &self.left[j], &self.right[i], &self.right[j]);
                let l_ij = self.left_act(c);
                let r_ij = self.right_act(c);
                if r_ij != rj.mul(ri).sub(&ri.mul(rj)) {
                    return Err(AlgebraError::LeibnizModuleAxiomFail { axiom: LeibnizAxiom::Mll, i, j });
                }
                if li.mul(rj) != rj.mul(li).sub(&l_ij) {
                    return Err(AlgebraError::LeibnizModuleAxiomFail { axiom: LeibnizAxiom::Lml, i, j });
                }
                if li.mul(lj) != l_ij.sub(&rj.mul(li)) {
                    return Err(AlgebraError::LeibnizModuleAxiomFail { axiom: LeibnizAxiom::Llm, i, j });
                }
            }
        }
        Ok(())
    }

    pub fn trivial(algebra: Arc<LeibnizAlgebra>, dim: usize) -> Self {
        let zero = vec![Matrix::zeros(algebra.field(), dim, dim); algebra.dim()];
        LeibnizModule { algebra, dim, left: zero.clone(), right: zero }
    }

    /// Both actions given by the bracket of the algebra.
    pub fn adjoint(algebra: &Arc<LeibnizAlgebra>) -> Self {
        let d = algebra.dim();
        let left = (0..d).map(|i| algebra.left_mult(i)).collect();
        let right = (0..d).map(|i| algebra.right_mult(i)).collect();
        LeibnizModule { algebra: algebra.clone(), dim: d, left, right }
    }

    /// A Lie module seen over the underlying Leibniz algebra: left action
    /// `ρ`, right action `−ρ`.
    pub fn from_lie(rep: &Representation) -> Self {
        let algebra = Arc::new(rep.algebra().to_leibniz());
        let m1 = -rep.field().one();
        let left = rep.actions().to_vec();
        let right = left.iter().map(|a| a.scale(&m1)).collect();
        LeibnizModule { algebra, dim: rep.dim(), left, right }
    }

    pub fn algebra(&self) -> &Arc<LeibnizAlgebra> {
        &self.algebra
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn field(&self) -> Field {
        self.algebra.field()
    }

    pub fn left(&self, i: usize) -> &Matrix {
        &self.left[i]
    }

    pub fn right(&self, i: usize) -> &Matrix {
        &self.right[i]
    }

    pub fn lefts(&self) -> &[Matrix] {
        &self.left
    }

    pub fn rights(&self) -> &[Matrix] {
        &self.right
    }

    fn combine(&self, family: &[Matrix], x: &[Scalar]) -> Matrix {
        let mut out = Matrix::zeros(self.field(), self.dim, self.dim);
        for (xi, a) in x.iter().zip(family) {
            if !xi.is_zero() {
                out = out.add(&a.scale(xi));
            }
        }
        out
    }

    /// Matrix of `m ↦ [x, m]`.
    pub fn left_act(&self, x: &[Scalar]) -> Matrix {
        self.combine(&self.left, x)
    }

    /// Matrix of `m ↦ [m, x]`.
    pub fn right_act(&self, x: &[Scalar]) -> Matrix {
        self.combine(&self.right, x)
    }

    /// `[x, m]`
    pub fn act_left(&self, x: &[Scalar], m: &[Scalar]) -> Vec<Scalar> {
        let mut out = vector::zeros(self.field(), self.dim);
        for (xi, a) in x.iter().zip(&self.left) {
            vector::axpy(&mut out, xi, &a.apply(m));
        }
        out
    }

    /// `[m, x]`
    pub fn act_right(&self, m: &[Scalar], x: &[Scalar]) -> Vec<Scalar> {
        let mut out = vector::zeros(self.field(), self.dim);
        for (xi, a) in x.iter().zip(&self.right) {
            vector::axpy(&mut out, xi, &a.apply(m));
        }
        out
    }

    /// Restriction along a Leibniz map `f: k → h`.
    pub fn pullback(&self, k: Arc<LeibnizAlgebra>, f: &LinearMap) -> Result<LeibnizModule, AlgebraError> {
        k.check_homomorphism(f, &self.algebra)?;
        let left = (0..k.dim()).map(|i| self.left_act(&f.image_of_basis(i))).collect();
        let right = (0..k.dim()).map(|i| self.right_act(&f.image_of_basis(i))).collect();
        Ok(LeibnizModule { algebra: k, dim: self.dim, left, right })
    }

    pub fn direct_sum(&self, other: &LeibnizModule) -> Result<LeibnizModule, AlgebraError> {
        if self.algebra != other.algebra {
            return Err(AlgebraError::AlgebraMismatch);
        }
        let left = self.left.iter().zip(&other.left).map(|(a, b)| a.block_diag(b)).collect();
        let right = self.right.iter().zip(&other.right).map(|(a, b)| a.block_diag(b)).collect();
        Ok(LeibnizModule { algebra: self.algebra.clone(), dim: self.dim + other.dim, left, right })
    }

    pub fn is_submodule(&self, sub: &Subspace) -> bool {
        sub.basis_vectors()
            .iter()
            .all(|v| self.left.iter().chain(&self.right).all(|a| sub.contains(&a.apply(v))))
    }

    pub fn submodule(&self, sub: &Subspace) -> Result<(LeibnizModule, LinearMap), AlgebraError> {
        if !self.is_submodule(sub) {
            return Err(AlgebraError::NotASubmodule);
        }
        let basis = sub.basis_vectors();
        let restrict = |a: &Matrix| {
            let cols: Vec<Vec<Scalar>> =
                basis.iter().map(|v| sub.coordinates(&a.apply(v)).expect("invariant")).collect();
            Matrix::from_columns(self.field(), basis.len(), &cols)
        };
        let left = self.left.iter().map(restrict).collect();
        let right = self.right.iter().map(restrict).collect();
        let inclusion = LinearMap::from_images(self.field(), self.dim, &basis);
        Ok((LeibnizModule { algebra: self.algebra.clone(), dim: basis.len(), left, right }, inclusion))
    }

    pub fn quotient_module(&self, sub: &Subspace) -> Result<(LeibnizModule, Quotient), AlgebraError> {
        if !self.is_submodule(sub) {
            return Err(AlgebraError::NotASubmodule);
        }
        let q = quotient(self.dim, sub);
        let induce = |a: &Matrix| q.projection.compose(&LinearMap::new(a.clone())).compose(&q.section).into_matrix();
        let left = self.left.iter().map(induce).collect();
        let right = self.right.iter().map(induce).collect();
        Ok((LeibnizModule { algebra: self.algebra.clone(), dim: q.dim, left, right }, q))
    }

    /// `{ m : [x, m] = 0 = [m, x] for all x }`
    pub fn invariants(&self) -> Subspace {
        let stacked = self
            .left
            .iter()
            .chain(&self.right)
            .fold(Matrix::zeros(self.field(), 0, self.dim), |acc, a| acc.vstack(a));
        kernel(&LinearMap::new(stacked))
    }
}
