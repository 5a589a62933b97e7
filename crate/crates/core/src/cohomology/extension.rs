use std::sync::Arc;

use crate::algebra::{LeibnizAlgebra, LeibnizModule, LieAlgebra, Representation, StructureConstants};
use crate::exactlin::{linear_section, Field, LinearMap, Matrix, Scalar};

use super::complex::{apply_coboundary, Coefficients};
use super::{Cochain, CohomologyError};

/// `0 → M → e → g → 0` with `e = M ⊕ g` as a vector space, module
/// coordinates first.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AbelianExtension<A> {
    pub algebra: A,
    pub inclusion: LinearMap,
    pub projection: LinearMap,
}

fn inclusion_projection(field: Field, m: usize, d: usize) -> (LinearMap, LinearMap) {
    let inc = LinearMap::identity(field, m).stack(&LinearMap::zero(field, m, d));
    let proj = LinearMap::zero(field, m, d).juxtapose(&LinearMap::identity(field, d));
    (inc, proj)
}

fn bracket_table(
    field: Field,
    m: usize,
    d: usize,
    g: &StructureConstants,
    mut entry: impl FnMut(usize, usize) -> Vec<Scalar>,
) -> StructureConstants {
    // entry(a, b) gives the M-part of [basis a, basis b] of e; the g-part is added here.
    let n = m + d;
    let mut records = Vec::new();
    for a in 0..n {
        for b in 0..n {
            for (k, v) in entry(a, b).into_iter().enumerate() {
                if !v.is_zero() {
                    records.push((a, b, k, v));
                }
            }
            if a >= m && b >= m {
                for (k, v) in g.bracket_basis(a - m, b - m).iter().enumerate() {
                    if !v.is_zero() {
                        records.push((a, b, m + k, v.clone()));
                    }
                }
            }
        }
    }
    StructureConstants::from_entries(field, n, records).expect("indices in range")
}

/// `[(m,x),(n,y)] = ([x,n] − [y,m] + α(x,y), [x,y])` on `M ⊕ g`.
pub fn abelian_extension_from_2cocycle(
    module: &Representation,
    alpha: &Cochain,
) -> Result<AbelianExtension<LieAlgebra>, CohomologyError> {
    if !module.accepts(alpha) || alpha.degree() != 2 {
        return Err(CohomologyError::Shape("expected a 2-cochain with values in the module".into()));
    }
    if !apply_coboundary(module, alpha).is_zero() {
        return Err(CohomologyError::NotACocycle { degree: 2 });
    }
    let field = module.field();
    let (m, d) = (module.dim(), module.algebra().dim());
    let zero = vec![field.zero(); m];
    let sc = bracket_table(field, m, d, module.algebra(), |a, b| match (a < m, b < m) {
        (true, true) => zero.clone(),
        (false, true) => module.action(a - m).column(b),
        (true, false) => module.action(b - m).column(a).iter().map(|v| -v).collect(),
        (false, false) => alpha.value(&[a - m, b - m]),
    });
    let algebra = LieAlgebra::new(sc)?;
    let (inclusion, projection) = inclusion_projection(field, m, d);
    Ok(AbelianExtension { algebra, inclusion, projection })
}

/// `α(x, y) = ι⁻¹([s x, s y] − s[x, y])` for the pivot section `s` of the
/// projection.
pub fn extension_cocycle(g: &LieAlgebra, ext: &AbelianExtension<LieAlgebra>) -> Cochain {
    extension_cocycle_with_section(g, ext, &linear_section(&ext.projection))
}

pub fn extension_cocycle_with_section(g: &LieAlgebra, ext: &AbelianExtension<LieAlgebra>, s: &LinearMap) -> Cochain {
    let back = linear_section(&ext.inclusion);
    let field = g.field();
    let lifts: Vec<Vec<Scalar>> = (0..g.dim()).map(|i| s.image_of_basis(i)).collect();
    Cochain::from_fn(super::Flavor::ChevalleyEilenberg, field, g.dim(), ext.inclusion.domain_dim(), 2, |t| {
        let (i, j) = (t[0], t[1]);
        let lhs = ext.algebra.bracket(&lifts[i], &lifts[j]);
        let rhs = s.apply(g.bracket_basis(i, j));
        let diff: Vec<Scalar> = lhs.iter().zip(&rhs).map(|(a, b)| a - b).collect();
        back.apply(&diff)
    })
}

/// `φ(m, x) = (m + c(x), x)`, an isomorphism from the extension by `α` to
/// the extension by `α − δc`.
pub fn cohomologous_extension_map(module: &Representation, c: &Cochain) -> LinearMap {
    let field = module.field();
    let (m, d) = (module.dim(), module.algebra().dim());
    let mut mat = Matrix::identity(field, m + d);
    for x in 0..d {
        for (r, v) in c.value(&[x]).into_iter().enumerate() {
            mat.set(r, m + x, v);
        }
    }
    LinearMap::new(mat)
}

/// `[(m,x),(n,y)] = ([x,n] + [m,y] + α(x,y), [x,y])` on `M ⊕ h`.
pub fn leibniz_abelian_extension(
    module: &LeibnizModule,
    alpha: &Cochain,
) -> Result<AbelianExtension<LeibnizAlgebra>, CohomologyError> {
    if !module.accepts(alpha) || alpha.degree() != 2 {
        return Err(CohomologyError::Shape("expected a 2-cochain with values in the module".into()));
    }
    if !apply_coboundary(module, alpha).is_zero() {
        return Err(CohomologyError::NotACocycle { degree: 2 });
    }
    let field = module.field();
    let (m, d) = (module.dim(), module.algebra().dim());
    let zero = vec![field.zero(); m];
    let sc = bracket_table(field, m, d, module.algebra(), |a, b| match (a < m, b < m) {
        (true, true) => zero.clone(),
        (false, true) => module.left(a - m).column(b),
        (true, false) => module.right(b - m).column(a),
        (false, false) => alpha.value(&[a - m, b - m]),
    });
    let algebra = LeibnizAlgebra::new(sc)?;
    let (inclusion, projection) = inclusion_projection(field, m, d);
    Ok(AbelianExtension { algebra, inclusion, projection })
}

/// The module `M` of an abelian extension pulled back to `e`: `e` acts
/// through its `g`-coordinates.
pub fn pull_back_to_extension(module: &Representation, ext: &AbelianExtension<LieAlgebra>) -> Representation {
    let e = Arc::new(ext.algebra.clone());
    module.pullback(e, &ext.projection).expect("projection is a Lie map")
}
