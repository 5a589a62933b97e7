use crate::algebra::{ModuleMorphism, Representation};
use crate::exactlin::{image, quotient, LinearMap, Quotient};

use super::ExtensionError;

/// `D = (B ⊕ C)/S` with `S = {(f a, −g a)}`, and `i: B → D`, `j: C → D`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Pushout {
    pub f: LinearMap,
    pub g: LinearMap,
    pub i: LinearMap,
    pub j: LinearMap,
    /// `r: B ⊕ C → D` and a section of it.
    pub quotient: Quotient,
}

impl Pushout {
    pub fn dim(&self) -> usize {
        self.quotient.dim
    }
}

/// Pushout of vector spaces along `f: A → B` and `g: A → C`.
pub fn pushout_spaces(f: &LinearMap, g: &LinearMap) -> Result<Pushout, ExtensionError> {
    if f.domain_dim() != g.domain_dim() {
        return Err(ExtensionError::Shape("pushout legs have different sources".into()));
    }
    let field = f.field();
    let (b, c) = (f.codomain_dim(), g.codomain_dim());
    let s = image(&f.stack(&g.neg()));
    let q = quotient(b + c, &s);
    let inc_b = LinearMap::identity(field, b).stack(&LinearMap::zero(field, b, c));
    let inc_c = LinearMap::zero(field, c, b).stack(&LinearMap::identity(field, c));
    let i = q.projection.compose(&inc_b);
    let j = q.projection.compose(&inc_c);
    Ok(Pushout { f: f.clone(), g: g.clone(), i, j, quotient: q })
}

/// Pushout of modules: the quotient of `B ⊕ C` by the submodule `S`.
pub fn pushout(f: &ModuleMorphism, g: &ModuleMorphism) -> Result<(Representation, Pushout), ExtensionError> {
    if f.source() != g.source() {
        return Err(ExtensionError::Shape("pushout legs have different sources".into()));
    }
    let po = pushout_spaces(f.map(), g.map())?;
    let sum = f.target().direct_sum(g.target())?;
    let s = image(&f.map().stack(&g.map().neg()));
    let (d, q) = sum.quotient_module(&s)?;
    debug_assert_eq!(q, po.quotient);
    Ok((d, po))
}

/// The unique `θ: D → D'` with `θ i = i'` and `θ j = j'`, namely
/// `θ((b, c) + S) = i'(b) + j'(c)`.
pub fn mediate(po: &Pushout, i2: &LinearMap, j2: &LinearMap) -> Result<LinearMap, ExtensionError> {
    if i2.domain_dim() != po.f.codomain_dim()
        || j2.domain_dim() != po.g.codomain_dim()
        || i2.codomain_dim() != j2.codomain_dim()
    {
        return Err(ExtensionError::Shape("cocone legs have the wrong shape".into()));
    }
    if j2.compose(&po.g) != i2.compose(&po.f) {
        return Err(ExtensionError::CoconeMismatch);
    }
    Ok(i2.juxtapose(j2).compose(&po.quotient.section))
}
