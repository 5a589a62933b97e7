use crate::exactlin::{linear_section, vector, LinearMap};

use super::lie::{CrossedModule, InducedPair};
use super::CrossedError;

/// `(α: V → V', β: L → L')`
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CrossedMorphism {
    pub alpha: LinearMap,
    pub beta: LinearMap,
}

impl CrossedMorphism {
    pub fn identity(cm: &CrossedModule) -> Self {
        let field = cm.algebra().field();
        CrossedMorphism {
            alpha: LinearMap::identity(field, cm.module().dim()),
            beta: LinearMap::identity(field, cm.algebra().dim()),
        }
    }

    /// `self ∘ first`
    pub fn compose(&self, first: &CrossedMorphism) -> CrossedMorphism {
        CrossedMorphism { alpha: self.alpha.compose(&first.alpha), beta: self.beta.compose(&first.beta) }
    }
}

/// Checks, in order: `β` is a Lie map, `∂'α = β∂`, `α[x,v] = [βx, αv]`, and
/// when `over` is given, that the induced maps on `g` and `M` are identities.
pub fn check_crossed_morphism(
    cm: &CrossedModule,
    target: &CrossedModule,
    phi: &CrossedMorphism,
    over: Option<(&InducedPair, &InducedPair)>,
) -> Result<(), CrossedError> {
    let (v, l) = (cm.module(), cm.algebra());
    let (v2, l2) = (target.module(), target.algebra());
    let field = l.field();
    if phi.alpha.domain_dim() != v.dim() || phi.alpha.codomain_dim() != v2.dim() {
        return Err(CrossedError::Shape("alpha has the wrong shape".into()));
    }
    if phi.beta.domain_dim() != l.dim() || phi.beta.codomain_dim() != l2.dim() {
        return Err(CrossedError::Shape("beta has the wrong shape".into()));
    }
    l.check_homomorphism(&phi.beta, l2)?;
    let left = target.partial().compose(&phi.alpha);
    let right = phi.beta.compose(cm.partial());
    if let Some(j) = (0..v.dim()).find(|&j| left.image_of_basis(j) != right.image_of_basis(j)) {
        return Err(CrossedError::SquareFail { j });
    }
    for i in 0..l.dim() {
        let bx = phi.beta.image_of_basis(i);
        let act2 = v2.act(&bx);
        for j in 0..v.dim() {
            let lhs = phi.alpha.apply(&v.action(i).column(j));
            let rhs = act2.apply(&phi.alpha.image_of_basis(j));
            if lhs != rhs {
                return Err(CrossedError::EquivarianceFail { i, j });
            }
        }
    }
    if let Some((p, p2)) = over {
        if p.g() != p2.g() || p.kernel().actions() != p2.kernel().actions() {
            return Err(CrossedError::Shape("induced pairs differ".into()));
        }
        let s = linear_section(p.projection());
        for i in 0..p.g().dim() {
            let image = p2.projection().apply(&phi.beta.apply(&s.image_of_basis(i)));
            if image != vector::unit(field, p.g().dim(), i) {
                return Err(CrossedError::NotIdentityOnG { i });
            }
        }
        for i in 0..p.kernel().dim() {
            if phi.alpha.apply(&p.inclusion().image_of_basis(i)) != p2.inclusion().image_of_basis(i) {
                return Err(CrossedError::NotIdentityOnM { i });
            }
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use std::sync::Arc;

    use super::*;
    use crate::algebra::{adjoint, catalog};
    use crate::exactlin::Field;

    fn q() -> Field {
        Field::Rational
    }

    #[test]
    fn identity_morphism() {
        let l = Arc::new(catalog::sl2(q()));
        let cm = CrossedModule::identity(&l);
        let pair = cm.induced_pair().unwrap();
        check_crossed_morphism(&cm, &cm, &CrossedMorphism::identity(&cm), Some((&pair, &pair))).unwrap();
    }

    #[test]
    fn zero_morphism_between_zero_crossed_modules() {
        let g = Arc::new(catalog::heisenberg(q()));
        let cm = CrossedModule::zero(&adjoint(&g));
        let zero = CrossedMorphism { alpha: LinearMap::zero(q(), 3, 3), beta: LinearMap::zero(q(), 3, 3) };
        check_crossed_morphism(&cm, &cm, &zero, None).unwrap();
        let pair = cm.induced_pair().unwrap();
        assert_eq!(
            check_crossed_morphism(&cm, &cm, &zero, Some((&pair, &pair))).unwrap_err(),
            CrossedError::NotIdentityOnG { i: 0 }
        );
        let half = CrossedMorphism { alpha: LinearMap::zero(q(), 3, 3), beta: LinearMap::identity(q(), 3) };
        assert_eq!(
            check_crossed_morphism(&cm, &cm, &half, Some((&pair, &pair))).unwrap_err(),
            CrossedError::NotIdentityOnM { i: 0 }
        );
    }

    #[test]
    fn doubling_alpha_breaks_the_square() {
        let l = Arc::new(catalog::sl2(q()));
        let cm = CrossedModule::identity(&l);
        let phi = CrossedMorphism { alpha: LinearMap::identity(q(), 3).scale(&q().from_i64(2)), beta: LinearMap::identity(q(), 3) };
        assert_eq!(check_crossed_morphism(&cm, &cm, &phi, None).unwrap_err(), CrossedError::SquareFail { j: 0 });
    }

    #[test]
    fn doubling_alpha_on_zero_crossed_module_is_fine_off_m() {
        // ∂ = 0: the square holds, equivariance holds since 2·id is equivariant,
        // but the induced map on M is not the identity.
        let g = Arc::new(catalog::affine2(q()));
        let cm = CrossedModule::zero(&adjoint(&g));
        let pair = cm.induced_pair().unwrap();
        let phi = CrossedMorphism { alpha: LinearMap::identity(q(), 2).scale(&q().from_i64(2)), beta: LinearMap::identity(q(), 2) };
        check_crossed_morphism(&cm, &cm, &phi, None).unwrap();
        assert_eq!(
            check_crossed_morphism(&cm, &cm, &phi, Some((&pair, &pair))).unwrap_err(),
            CrossedError::NotIdentityOnM { i: 0 }
        );
    }
}
