use std::sync::Arc;

use crate::algebra::{LeibnizAlgebra, LeibnizModule, LeibnizModuleMorphism};
use crate::cohomology::{class_of, leibniz_abelian_extension, Cochain, CohomologyClass, Flavor};
use crate::exactlin::{image, kernel, linear_section, vector, LinearMap, Matrix, Scalar};

use super::lie::CrossedModule;
use super::theta::{check_sections, pivot_sections, Defect, Sections, ThetaTable};
use super::CrossedError;

/// `(V, h, ∂)` with `V` a Leibniz `h`-module, `∂` compatible with both
/// actions, and `[∂v, w] = [v, ∂w]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LeibnizCrossedModule {
    v: LeibnizModule,
    partial: LinearMap,
}

impl LeibnizCrossedModule {
    pub fn new(v: LeibnizModule, partial: LinearMap) -> Result<Self, CrossedError> {
        let cm = Self::new_unchecked(v, partial)?;
        cm.validate()?;
        Ok(cm)
    }

    pub fn new_unchecked(v: LeibnizModule, partial: LinearMap) -> Result<Self, CrossedError> {
        if partial.domain_dim() != v.dim() || partial.codomain_dim() != v.algebra().dim() {
            return Err(CrossedError::Shape(format!(
                "partial must be {}x{}",
                v.algebra().dim(),
                v.dim()
            )));
        }
        Ok(LeibnizCrossedModule { v, partial })
    }

    /// `∂[e_i, v_j] = [e_i, ∂v_j]` and `∂[v_j, e_i] = [∂v_j, e_i]` on all
    /// pairs, then `[∂v_i, v_j] = [v_i, ∂v_j]`.
    pub fn validate(&self) -> Result<(), CrossedError> {
        let h = self.v.algebra();
        let d = self.partial.matrix();
        for i in 0..h.dim() {
            for (lhs, rhs) in [
                (d.mul(self.v.left(i)), h.left_mult(i).mul(d)),
                (d.mul(self.v.right(i)), h.right_mult(i).mul(d)),
            ] {
                if lhs != rhs {
                    let j = (0..self.v.dim()).find(|&j| lhs.column(j) != rhs.column(j)).unwrap_or(0);
                    return Err(CrossedError::EquivarianceFail { i, j });
                }
            }
        }
        let n = self.v.dim();
        let field = self.v.field();
        let images: Vec<Vec<Scalar>> = (0..n).map(|i| self.partial.image_of_basis(i)).collect();
        for i in 0..n {
            for j in 0..n {
                let a = self.v.act_left(&images[i], &vector::unit(field, n, j));
                let b = self.v.act_right(&vector::unit(field, n, i), &images[j]);
                if a != b {
                    return Err(CrossedError::PeifferFail { i, j });
                }
            }
        }
        Ok(())
    }

    /// `(M, h, 0)`
    pub fn zero(module: &LeibnizModule) -> Self {
        let partial = LinearMap::zero(module.field(), module.dim(), module.algebra().dim());
        LeibnizCrossedModule { v: module.clone(), partial }
    }

    /// `(h, h, id)` with both adjoint actions.
    pub fn identity(h: &Arc<LeibnizAlgebra>) -> Self {
        LeibnizCrossedModule { v: LeibnizModule::adjoint(h), partial: LinearMap::identity(h.field(), h.dim()) }
    }

    /// A Lie crossed module seen over the underlying Leibniz algebra, with
    /// right action `[v, x] = −[x, v]`.
    pub fn from_lie(cm: &CrossedModule) -> Self {
        LeibnizCrossedModule { v: LeibnizModule::from_lie(cm.module()), partial: cm.partial().clone() }
    }

    pub fn algebra(&self) -> &Arc<LeibnizAlgebra> {
        self.v.algebra()
    }

    pub fn module(&self) -> &LeibnizModule {
        &self.v
    }

    pub fn partial(&self) -> &LinearMap {
        &self.partial
    }

    /// `h/im ∂` in the canonical quotient basis and `ker ∂` in its RREF basis.
    pub fn induced_pair(&self) -> Result<LeibnizInducedPair, CrossedError> {
        let h = self.algebra();
        let (g, qt) = h.quotient(&image(&self.partial))?;
        let g = Arc::new(g);
        let ker = kernel(&self.partial);
        let basis = ker.basis_vectors();
        let field = self.v.field();
        let restrict = |x: &[Scalar], left: bool| {
            let cols: Vec<Vec<Scalar>> = basis
                .iter()
                .map(|b| {
                    let w = if left { self.v.act_left(x, b) } else { self.v.act_right(b, x) };
                    ker.coordinates(&w).expect("h preserves ker ∂")
                })
                .collect();
            Matrix::from_columns(field, basis.len(), &cols)
        };
        let lifts: Vec<Vec<Scalar>> = (0..g.dim()).map(|i| qt.section.image_of_basis(i)).collect();
        let left = lifts.iter().map(|x| restrict(x, true)).collect();
        let right = lifts.iter().map(|x| restrict(x, false)).collect();
        let m = LeibnizModule::new(g.clone(), basis.len(), left, right)?;
        let inclusion = LinearMap::from_images(field, self.v.dim(), &basis);
        Ok(LeibnizInducedPair { g, projection: qt.projection, kernel: m, inclusion })
    }
}

/// Leibniz analogue of [`super::InducedPair`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LeibnizInducedPair {
    g: Arc<LeibnizAlgebra>,
    projection: LinearMap,
    kernel: LeibnizModule,
    inclusion: LinearMap,
}

impl LeibnizInducedPair {
    pub fn framed(
        cm: &LeibnizCrossedModule,
        projection: LinearMap,
        kernel_module: LeibnizModule,
        inclusion: LinearMap,
    ) -> Result<Self, CrossedError> {
        let g = kernel_module.algebra().clone();
        let h = cm.algebra();
        let field = h.field();
        if projection.domain_dim() != h.dim() || projection.codomain_dim() != g.dim() {
            return Err(CrossedError::Framing("projection has the wrong shape".into()));
        }
        if inclusion.domain_dim() != kernel_module.dim() || inclusion.codomain_dim() != cm.module().dim() {
            return Err(CrossedError::Framing("inclusion has the wrong shape".into()));
        }
        h.check_homomorphism(&projection, &g)
            .map_err(|e| CrossedError::Framing(format!("projection is not a Leibniz map: {e}")))?;
        if !projection.is_surjective() || kernel(&projection) != image(cm.partial()) {
            return Err(CrossedError::Framing("kernel of the projection is not the image of ∂".into()));
        }
        if !inclusion.is_injective() || image(&inclusion) != kernel(cm.partial()) {
            return Err(CrossedError::Framing("image of the inclusion is not the kernel of ∂".into()));
        }
        let s = linear_section(&projection);
        for i in 0..g.dim() {
            let lift = s.image_of_basis(i);
            let e = vector::unit(field, g.dim(), i);
            for b in 0..kernel_module.dim() {
                let m = vector::unit(field, kernel_module.dim(), b);
                let im = inclusion.apply(&m);
                let left_ok = inclusion.apply(&kernel_module.act_left(&e, &m)) == cm.module().act_left(&lift, &im);
                let right_ok = inclusion.apply(&kernel_module.act_right(&m, &e)) == cm.module().act_right(&im, &lift);
                if !left_ok || !right_ok {
                    return Err(CrossedError::Framing(format!(
                        "actions of g on M disagree with those of h on V at ({i}, {b})"
                    )));
                }
            }
        }
        Ok(LeibnizInducedPair { g, projection, kernel: kernel_module, inclusion })
    }

    pub fn g(&self) -> &Arc<LeibnizAlgebra> {
        &self.g
    }

    pub fn projection(&self) -> &LinearMap {
        &self.projection
    }

    pub fn kernel(&self) -> &LeibnizModule {
        &self.kernel
    }

    pub fn inclusion(&self) -> &LinearMap {
        &self.inclusion
    }
}

pub fn leibniz_choose_sections(cm: &LeibnizCrossedModule, pair: &LeibnizInducedPair) -> Sections {
    pivot_sections(pair.projection(), cm.partial())
}

/// `θ(x,y,z) = [s x, g(y,z)] + [g(x,z), s y] − [g(x,y), s z] − g([x,y],z)
/// + g([x,z],y) + g(x,[y,z])` on every basis triple.
pub fn leibniz_theta_table(
    cm: &LeibnizCrossedModule,
    pair: &LeibnizInducedPair,
    sections: &Sections,
) -> Result<ThetaTable, CrossedError> {
    check_sections(pair.projection(), cm.partial(), sections)?;
    let g = pair.g();
    let defect = Defect::new(g, cm.algebra(), sections);
    let v = cm.module();
    Ok(ThetaTable::tabulate(g.dim(), g.field(), |x, y, z| {
        let mut out = v.act_left(&defect.lifts[x], defect.at(y, z));
        out = vector::add(&out, &v.act_right(defect.at(x, z), &defect.lifts[y]));
        out = vector::sub(&out, &v.act_right(defect.at(x, y), &defect.lifts[z]));
        out = vector::sub(&out, &defect.first_combo(g.bracket_basis(x, y), z));
        out = vector::add(&out, &defect.first_combo(g.bracket_basis(x, z), y));
        vector::add(&out, &defect.second_combo(x, g.bracket_basis(y, z)))
    }))
}

/// `θ` as a Leibniz 3-cochain with values in `M`.
pub fn leibniz_theta(cm: &LeibnizCrossedModule, pair: &LeibnizInducedPair, sections: &Sections) -> Result<Cochain, CrossedError> {
    leibniz_theta_table(cm, pair, sections)?.to_cochain(Flavor::Leibniz, pair.inclusion())
}

/// `[θ] ∈ HL³(g, M)` with the pivot sections.
pub fn leibniz_classify2(cm: &LeibnizCrossedModule, pair: &LeibnizInducedPair) -> Result<CohomologyClass, CrossedError> {
    let z = leibniz_theta(cm, pair, &leibniz_choose_sections(cm, pair))?;
    Ok(class_of(pair.kernel(), &z)?)
}

/// Leibniz analogue of [`super::yoneda_crossed_module`] for an exact
/// `0 → M →α M' →β M'' → 0` of Leibniz modules.
pub fn leibniz_yoneda_crossed_module(
    alpha: &LeibnizModuleMorphism,
    beta: &LeibnizModuleMorphism,
    ext2: &Cochain,
) -> Result<(LeibnizCrossedModule, LeibnizInducedPair), CrossedError> {
    if alpha.target() != beta.source()
        || !alpha.map().is_injective()
        || !beta.map().is_surjective()
        || image(alpha.map()) != kernel(beta.map())
    {
        return Err(CrossedError::Shape("alpha, beta do not form a short exact sequence".into()));
    }
    let ext = leibniz_abelian_extension(beta.target(), ext2)?;
    let e = Arc::new(ext.algebra);
    let v = alpha.target().pullback(e, &ext.projection)?;
    let mu = ext.inclusion.compose(beta.map());
    let cm = LeibnizCrossedModule::new(v, mu)?;
    let pair = LeibnizInducedPair::framed(&cm, ext.projection, alpha.source().clone(), alpha.map().clone())?;
    Ok((cm, pair))
}
