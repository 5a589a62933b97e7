use crate::algebra::{ModuleMorphism, Representation};
use crate::exactlin::{image, kernel, linear_section, LinearMap, Subspace};

use super::complex::{apply_coboundary, Coefficients};
use super::groups::{class_of, CohomologyClass};
use super::{Cochain, CohomologyError};

/// `0 → M →α M' →β M'' → 0`, exact, over one Lie algebra.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ShortExactSequence {
    alpha: ModuleMorphism,
    beta: ModuleMorphism,
}

impl ShortExactSequence {
    pub fn new(alpha: ModuleMorphism, beta: ModuleMorphism) -> Result<Self, CohomologyError> {
        if alpha.target() != beta.source() {
            return Err(CohomologyError::NotExact("the middle modules differ".into()));
        }
        if !alpha.map().is_injective() {
            return Err(CohomologyError::NotExact("alpha is not injective".into()));
        }
        if !beta.map().is_surjective() {
            return Err(CohomologyError::NotExact("beta is not surjective".into()));
        }
        if image(alpha.map()) != kernel(beta.map()) {
            return Err(CohomologyError::NotExact("image(alpha) != kernel(beta)".into()));
        }
        Ok(ShortExactSequence { alpha, beta })
    }

    /// `0 → S → M' → M'/S → 0` for a submodule `S`.
    pub fn from_submodule(middle: &Representation, sub: &Subspace) -> Result<Self, CohomologyError> {
        let (s, inc) = middle.submodule(sub)?;
        let (quot, q) = middle.quotient_module(sub)?;
        let alpha = ModuleMorphism::new(s, middle.clone(), inc)?;
        let beta = ModuleMorphism::new(middle.clone(), quot, q.projection)?;
        Self::new(alpha, beta)
    }

    /// `0 → M → M ⊕ M'' → M'' → 0`.
    pub fn split(m: &Representation, m2: &Representation) -> Result<Self, CohomologyError> {
        let middle = m.direct_sum(m2)?;
        let field = m.field();
        let inc = LinearMap::identity(field, m.dim()).stack(&LinearMap::zero(field, m.dim(), m2.dim()));
        let proj = LinearMap::zero(field, m.dim(), m2.dim()).juxtapose(&LinearMap::identity(field, m2.dim()));
        let alpha = ModuleMorphism::new(m.clone(), middle.clone(), inc)?;
        let beta = ModuleMorphism::new(middle, m2.clone(), proj)?;
        Self::new(alpha, beta)
    }

    pub fn alpha(&self) -> &ModuleMorphism {
        &self.alpha
    }

    pub fn beta(&self) -> &ModuleMorphism {
        &self.beta
    }

    /// `M`
    pub fn sub(&self) -> &Representation {
        self.alpha.source()
    }

    /// `M'`
    pub fn middle(&self) -> &Representation {
        self.alpha.target()
    }

    /// `M''`
    pub fn quotient(&self) -> &Representation {
        self.beta.target()
    }

    /// The pivot section of `β`.
    pub fn default_lift(&self) -> LinearMap {
        linear_section(self.beta.map())
    }
}

/// Snake-lemma connecting map on cochains: lift through `β` with `lift`,
/// apply `δ` in `M'`, pull back through `α`.
pub fn connecting_cochain(ses: &ShortExactSequence, c: &Cochain, lift: &LinearMap) -> Result<Cochain, CohomologyError> {
    let quot = ses.quotient();
    if !quot.accepts(c) {
        return Err(CohomologyError::Shape("cochain is not over the quotient module".into()));
    }
    if ses.beta.map().compose(lift) != LinearMap::identity(quot.field(), quot.dim()) {
        return Err(CohomologyError::Shape("lift is not a section of beta".into()));
    }
    let lifted = c.map_values(lift);
    let d = apply_coboundary(ses.middle(), &lifted);
    let back = linear_section(ses.alpha.map());
    let pulled = d.map_values(&back);
    debug_assert_eq!(pulled.map_values(ses.alpha.map()), d, "δ of a lift of a cocycle lies in image(α)");
    if pulled.map_values(ses.alpha.map()) != d {
        return Err(CohomologyError::NotACocycle { degree: c.degree() });
    }
    Ok(pulled)
}

/// `H^n(g, M'') → H^{n+1}(g, M)` with the pivot section of `β`.
pub fn connecting_hom(ses: &ShortExactSequence, c: &CohomologyClass) -> Result<CohomologyClass, CohomologyError> {
    connecting_hom_with_lift(ses, c, &ses.default_lift())
}

/// As [`connecting_hom`] with a caller-chosen section of `β`.
pub fn connecting_hom_with_lift(
    ses: &ShortExactSequence,
    c: &CohomologyClass,
    lift: &LinearMap,
) -> Result<CohomologyClass, CohomologyError> {
    let z = connecting_cochain(ses, c.representative(), lift)?;
    class_of(ses.sub(), &z)
}

/// `α_*` on cochains.
pub fn push_forward_cochain(f: &ModuleMorphism, c: &Cochain) -> Cochain {
    c.map_values(f.map())
}

/// `α_*` on classes.
pub fn push_forward_class(f: &ModuleMorphism, c: &CohomologyClass) -> Result<CohomologyClass, CohomologyError> {
    class_of(f.target(), &push_forward_cochain(f, c.representative()))
}
