use crate::exactlin::LinearMap;

use super::{AlgebraError, LeibnizModule, Representation};

/// An equivariant linear map between modules over the same Lie algebra.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModuleMorphism {
    source: Representation,
    target: Representation,
    map: LinearMap,
}

impl ModuleMorphism {
    /// Checks `f ∘ ρ_source(e_i) = ρ_target(e_i) ∘ f` for every basis vector.
    pub fn new(source: Representation, target: Representation, map: LinearMap) -> Result<Self, AlgebraError> {
        if source.algebra() != target.algebra() {
            return Err(AlgebraError::AlgebraMismatch);
        }
        if map.domain_dim() != source.dim() || map.codomain_dim() != target.dim() {
            return Err(AlgebraError::Shape(format!(
                "morphism must be {}x{}, got {}x{}",
                target.dim(),
                source.dim(),
                map.codomain_dim(),
                map.domain_dim()
            )));
        }
        for i in 0..source.algebra().dim() {
            if map.matrix().mul(source.action(i)) != target.action(i).mul(map.matrix()) {
                return Err(AlgebraError::NotEquivariant { i });
            }
        }
        Ok(ModuleMorphism { source, target, map })
    }

    pub fn identity(m: &Representation) -> Self {
        ModuleMorphism { source: m.clone(), target: m.clone(), map: LinearMap::identity(m.field(), m.dim()) }
    }

    pub fn zero(source: &Representation, target: &Representation) -> Self {
        ModuleMorphism {
            source: source.clone(),
            target: target.clone(),
            map: LinearMap::zero(source.field(), source.dim(), target.dim()),
        }
    }

    pub fn source(&self) -> &Representation {
        &self.source
    }

    pub fn target(&self) -> &Representation {
        &self.target
    }

    pub fn map(&self) -> &LinearMap {
        &self.map
    }

    /// `self ∘ first`
    pub fn compose(&self, first: &ModuleMorphism) -> Result<ModuleMorphism, AlgebraError> {
        if first.target.dim() != self.source.dim() {
            return Err(AlgebraError::Shape("composition of incompatible morphisms".into()));
        }
        ModuleMorphism::new(first.source.clone(), self.target.clone(), self.map.compose(&first.map))
    }

    pub fn neg(&self) -> ModuleMorphism {
        ModuleMorphism { source: self.source.clone(), target: self.target.clone(), map: self.map.neg() }
    }
}

/// An equivariant map of Leibniz modules (commutes with both action families).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LeibnizModuleMorphism {
    source: LeibnizModule,
    target: LeibnizModule,
    map: LinearMap,
}

impl LeibnizModuleMorphism {
    pub fn new(source: LeibnizModule, target: LeibnizModule, map: LinearMap) -> Result<Self, AlgebraError> {
        if source.algebra() != target.algebra() {
            return Err(AlgebraError::AlgebraMismatch);
        }
        if map.domain_dim() != source.dim() || map.codomain_dim() != target.dim() {
            return Err(AlgebraError::Shape("morphism has the wrong shape".into()));
        }
        let f = map.matrix();
        for i in 0..source.algebra().dim() {
            if f.mul(source.left(i)) != target.left(i).mul(f) || f.mul(source.right(i)) != target.right(i).mul(f) {
                return Err(AlgebraError::NotEquivariant { i });
            }
        }
        Ok(LeibnizModuleMorphism { source, target, map })
    }

    pub fn source(&self) -> &LeibnizModule {
        &self.source
    }

    pub fn target(&self) -> &LeibnizModule {
        &self.target
    }

    pub fn map(&self) -> &LinearMap {
        &self.map
    }
}

#[cfg(test)]
mod tests {
    use std::sync::Arc;

    use super::*;
    use crate::algebra::{adjoint, catalog};
    use crate::exactlin::{Field, Matrix};

    #[test]
    fn scalar_multiples_of_identity_are_equivariant() {
        let q = Field::Rational;
        let g = Arc::new(catalog::sl2(q));
        let ad = adjoint(&g);
        let two = LinearMap::identity(q, 3).scale(&q.from_i64(2));
        assert!(ModuleMorphism::new(ad.clone(), ad.clone(), two).is_ok());
    }

    #[test]
    fn non_equivariant_map_is_rejected() {
        let q = Field::Rational;
        let g = Arc::new(catalog::sl2(q));
        let ad = adjoint(&g);
        let p = LinearMap::new(Matrix::from_i64(q, &[&[1, 0, 0], &[0, 0, 0], &[0, 0, 0]]));
        assert_eq!(ModuleMorphism::new(ad.clone(), ad, p).unwrap_err(), AlgebraError::NotEquivariant { i: 0 });
    }
}
