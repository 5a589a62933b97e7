use std::sync::Arc;

use crate::algebra::{adjoint, LieAlgebra, Representation};
use crate::exactlin::{image, kernel, linear_section, vector, LinearMap, Matrix, Scalar};

use super::CrossedError;

/// `(V, L, ∂)`: `V` an `L`-module and `∂: V → L` an equivariant map with
/// `[∂v, w] = −[∂w, v]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CrossedModule {
    v: Representation,
    partial: LinearMap,
}

impl CrossedModule {
    pub fn new(v: Representation, partial: LinearMap) -> Result<Self, CrossedError> {
        let cm = Self::new_unchecked(v, partial)?;
        cm.validate()?;
        Ok(cm)
    }

    pub fn new_unchecked(v: Representation, partial: LinearMap) -> Result<Self, CrossedError> {
        if partial.domain_dim() != v.dim() || partial.codomain_dim() != v.algebra().dim() {
            return Err(CrossedError::Shape(format!(
                "partial must be {}x{}",
                v.algebra().dim(),
                v.dim()
            )));
        }
        Ok(CrossedModule { v, partial })
    }

    /// Equivariance `∂[e_i, v_j] = [e_i, ∂v_j]` on all pairs, then
    /// `[∂v_i, v_j] = −[∂v_j, v_i]` on all pairs.
    pub fn validate(&self) -> Result<(), CrossedError> {
        let l = self.v.algebra();
        let d = self.partial.matrix();
        for i in 0..l.dim() {
            let lhs = d.mul(self.v.action(i));
            let rhs = l.left_mult(i).mul(d);
            if lhs != rhs {
                let j = (0..self.v.dim()).find(|&j| lhs.column(j) != rhs.column(j)).unwrap_or(0);
                return Err(CrossedError::EquivarianceFail { i, j });
            }
        }
        let images: Vec<Vec<Scalar>> = (0..self.v.dim()).map(|i| self.partial.image_of_basis(i)).collect();
        for i in 0..self.v.dim() {
            let act_i = self.v.act(&images[i]);
            for j in 0..self.v.dim() {
                let a = act_i.column(j);
                let b = self.v.act_on(&images[j], &vector::unit(self.v.field(), self.v.dim(), i));
                if vector::add(&a, &b) != vector::zeros(self.v.field(), self.v.dim()) {
                    return Err(CrossedError::PeifferFail { i, j });
                }
            }
        }
        Ok(())
    }

    /// `(M, g, 0)`
    pub fn zero(module: &Representation) -> Self {
        let partial = LinearMap::zero(module.field(), module.dim(), module.algebra().dim());
        CrossedModule { v: module.clone(), partial }
    }

    /// `(L, L, id)` with the adjoint action.
    pub fn identity(l: &Arc<LieAlgebra>) -> Self {
        CrossedModule { v: adjoint(l), partial: LinearMap::identity(l.field(), l.dim()) }
    }

    /// `L`
    pub fn algebra(&self) -> &Arc<LieAlgebra> {
        self.v.algebra()
    }

    /// `V`
    pub fn module(&self) -> &Representation {
        &self.v
    }

    pub fn partial(&self) -> &LinearMap {
        &self.partial
    }

    /// The canonical induced pair: `g = L / im ∂` in the canonical quotient
    /// basis and `M = ker ∂` in its RREF basis.
    pub fn induced_pair(&self) -> Result<InducedPair, CrossedError> {
        let l = self.algebra();
        let im = image(&self.partial);
        let (g, q) = l.quotient(&im)?;
        let g = Arc::new(g);
        let ker = kernel(&self.partial);
        let basis = ker.basis_vectors();
        let inclusion = LinearMap::from_images(self.v.field(), self.v.dim(), &basis);
        let actions = (0..g.dim())
            .map(|i| {
                let lift = q.section.image_of_basis(i);
                let cols: Vec<Vec<Scalar>> = basis
                    .iter()
                    .map(|b| ker.coordinates(&self.v.act_on(&lift, b)).expect("L preserves ker ∂"))
                    .collect();
                Matrix::from_columns(self.v.field(), basis.len(), &cols)
            })
            .collect();
        let m = Representation::new(g.clone(), basis.len(), actions)?;
        Ok(InducedPair { g, projection: q.projection, kernel: m, inclusion })
    }
}

/// The Lie algebra `g = coker ∂` with its projection `π: L → g`, and the
/// `g`-module `M = ker ∂` with its inclusion `ι: M → V`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InducedPair {
    g: Arc<LieAlgebra>,
    projection: LinearMap,
    kernel: Representation,
    inclusion: LinearMap,
}

impl InducedPair {
    /// An explicit identification of `coker ∂` with `g` and of `ker ∂` with
    /// `M`, checked against the crossed module.
    pub fn framed(
        cm: &CrossedModule,
        projection: LinearMap,
        kernel_module: Representation,
        inclusion: LinearMap,
    ) -> Result<Self, CrossedError> {
        let g = kernel_module.algebra().clone();
        let l = cm.algebra();
        let field = l.field();
        if projection.domain_dim() != l.dim() || projection.codomain_dim() != g.dim() {
            return Err(CrossedError::Framing("projection has the wrong shape".into()));
        }
        if inclusion.domain_dim() != kernel_module.dim() || inclusion.codomain_dim() != cm.module().dim() {
            return Err(CrossedError::Framing("inclusion has the wrong shape".into()));
        }
        l.check_homomorphism(&projection, &g)
            .map_err(|e| CrossedError::Framing(format!("projection is not a Lie map: {e}")))?;
        if !projection.is_surjective() || kernel(&projection) != image(cm.partial()) {
            return Err(CrossedError::Framing("kernel of the projection is not the image of ∂".into()));
        }
        if !inclusion.is_injective() || image(&inclusion) != kernel(cm.partial()) {
            return Err(CrossedError::Framing("image of the inclusion is not the kernel of ∂".into()));
        }
        let s = linear_section(&projection);
        for i in 0..g.dim() {
            let lift = s.image_of_basis(i);
            for b in 0..kernel_module.dim() {
                let m = vector::unit(field, kernel_module.dim(), b);
                let lhs = inclusion.apply(&kernel_module.act_on(&vector::unit(field, g.dim(), i), &m));
                let rhs = cm.module().act_on(&lift, &inclusion.apply(&m));
                if lhs != rhs {
                    return Err(CrossedError::Framing(format!(
                        "action of g on M disagrees with the action of L on V at ({i}, {b})"
                    )));
                }
            }
        }
        Ok(InducedPair { g, projection, kernel: kernel_module, inclusion })
    }

    pub fn g(&self) -> &Arc<LieAlgebra> {
        &self.g
    }

    /// `π: L → g`
    pub fn projection(&self) -> &LinearMap {
        &self.projection
    }

    /// `M` as a `g`-module.
    pub fn kernel(&self) -> &Representation {
        &self.kernel
    }

    /// `ι: M → V`
    pub fn inclusion(&self) -> &LinearMap {
        &self.inclusion
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::catalog;
    use crate::exactlin::Field;

    fn q() -> Field {
        Field::Rational
    }

    #[test]
    fn identity_crossed_module() {
        let l = Arc::new(catalog::sl2(q()));
        let cm = CrossedModule::identity(&l);
        cm.validate().unwrap();
        let pair = cm.induced_pair().unwrap();
        assert_eq!(pair.g().dim(), 0);
        assert_eq!(pair.kernel().dim(), 0);
    }

    #[test]
    fn zero_crossed_module() {
        let g = Arc::new(catalog::heisenberg(q()));
        let m = adjoint(&g);
        let cm = CrossedModule::zero(&m);
        cm.validate().unwrap();
        let pair = cm.induced_pair().unwrap();
        assert_eq!(**pair.g(), *g);
        assert_eq!(pair.kernel().actions(), m.actions());
    }

    #[test]
    fn coadjoint_identity_is_rejected() {
        let l = Arc::new(catalog::sl2(q()));
        // The coadjoint action is not the bracket, so ∂ = id breaks a condition.
        let ad = adjoint(&l);
        let cm = CrossedModule::new(ad.dual(), LinearMap::identity(q(), 3));
        assert!(matches!(
            cm.unwrap_err(),
            CrossedError::EquivarianceFail { .. } | CrossedError::PeifferFail { .. }
        ));
    }

    #[test]
    fn peiffer_witness_on_central_map() {
        // L = abelian <a, b>, V = K² with b acting by the Jordan block, ∂ = e1 ↦ b.
        // ∂ kills the image of the block so it is equivariant, but [∂e1, e1] = e0.
        let l = Arc::new(crate::algebra::LieAlgebra::abelian(q(), 2));
        let n = Matrix::from_i64(q(), &[&[0, 1], &[0, 0]]);
        let z = Matrix::zeros(q(), 2, 2);
        let v = Representation::new(l, 2, vec![z, n]).unwrap();
        let d = LinearMap::new(Matrix::from_i64(q(), &[&[0, 0], &[0, 1]]));
        assert_eq!(CrossedModule::new(v, d).unwrap_err(), CrossedError::PeifferFail { i: 1, j: 1 });
    }
}
