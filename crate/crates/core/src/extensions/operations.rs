use std::sync::Arc;

use crate::algebra::{ModuleMorphism, Representation};
use crate::cohomology::{CohomologyClass, ShortExactSequence};
use crate::crossed::{classify2, CrossedModule, InducedPair};
use crate::exactlin::{kernel, solve, LinearMap, Matrix, Scalar};

use super::morphism::{check_extension_morphism, ExtensionMorphism};
use super::pushout::{mediate, pushout};
use super::{CrossedExtension, ExtensionError};

/// The zero extension `0 → M = M → 0 → ⋯ → 0 → g = g → 0` for `n ≥ 3`, and
/// the crossed module `(M, g, 0)` for `n = 2`.
pub fn zero_extension(m: &Representation, n: usize) -> CrossedExtension {
    assert!(n >= 2, "extensions have length at least 2");
    let g = m.algebra().clone();
    let field = g.field();
    let id_m = LinearMap::identity(field, m.dim());
    let id_g = LinearMap::identity(field, g.dim());
    if n == 2 {
        return CrossedExtension::new_unchecked(m.clone(), id_m, vec![], vec![], CrossedModule::zero(m), id_g)
            .expect("shapes agree");
    }
    let zero = Representation::trivial(g.clone(), 0);
    let mut chain = vec![m.clone()];
    chain.extend(std::iter::repeat_n(zero.clone(), n - 3));
    let mut maps = vec![LinearMap::zero(field, m.dim(), 0)];
    maps.extend(std::iter::repeat_n(LinearMap::zero(field, 0, 0), n - 3));
    CrossedExtension::new_unchecked(m.clone(), id_m, chain, maps, CrossedModule::zero(&zero), id_g).expect("shapes agree")
}

/// The extension with head `−f`.
pub fn negate(e: &CrossedExtension) -> CrossedExtension {
    e.with_head(e.head().neg()).expect("same shape")
}

/// `αE`: the head `M → M_{n−1}` is replaced by `M' → M_{n−1} ⊔_M M'`, and
/// `∂_{n−1}` by the map out of the pushout induced by `(∂_{n−1}, 0)`.
/// For `n = 2` the pushout is taken over `L`, with `M` and `M'` acted on
/// through `π`.
pub fn push_forward(alpha: &ModuleMorphism, e: &CrossedExtension) -> Result<CrossedExtension, ExtensionError> {
    Ok(push_forward_with_morphism(alpha, e)?.0)
}

/// As [`push_forward`], also returning the morphism `(α, i, id, …, id)`.
pub fn push_forward_with_morphism(
    alpha: &ModuleMorphism,
    e: &CrossedExtension,
) -> Result<(CrossedExtension, ExtensionMorphism), ExtensionError> {
    if alpha.source() != e.kernel_module() {
        return Err(ExtensionError::BaseMismatch("alpha does not start at the kernel module".into()));
    }
    let n = e.n();
    let field = e.g().field();
    let m2 = alpha.target().clone();
    let (m, head, mut chain, mut maps, base, pi) = e.clone().into_parts();
    let l_dim = base.algebra().dim();
    let mut deltas: Vec<LinearMap> = chain.iter().map(|c| LinearMap::identity(field, c.dim())).collect();
    deltas.push(LinearMap::identity(field, base.module().dim()));
    let (head, base) = if n >= 3 {
        let f = ModuleMorphism::new(m, chain[0].clone(), head)?;
        let (d, po) = pushout(&f, alpha)?;
        let next = maps[0].codomain_dim();
        maps[0] = mediate(&po, &maps[0], &LinearMap::zero(field, m2.dim(), next))?;
        chain[0] = d;
        deltas[0] = po.i.clone();
        (po.j, base)
    } else {
        let l = base.algebra().clone();
        let m_l = m.pullback(l.clone(), &pi)?;
        let m2_l = m2.pullback(l, &pi)?;
        let f = ModuleMorphism::new(m_l.clone(), base.module().clone(), head)?;
        let a = ModuleMorphism::new(m_l, m2_l, alpha.map().clone())?;
        let (d, po) = pushout(&f, &a)?;
        let partial = mediate(&po, base.partial(), &LinearMap::zero(field, m2.dim(), l_dim))?;
        deltas[0] = po.i.clone();
        (po.j, CrossedModule::new(d, partial).map_err(ExtensionError::BaseNotCrossed)?)
    };
    let out = CrossedExtension::new(m2, head, chain, maps, base, pi)?;
    let phi = ExtensionMorphism { alpha: alpha.map().clone(), deltas, beta: LinearMap::identity(field, l_dim) };
    check_extension_morphism(e, &out, &phi)?;
    Ok((out, phi))
}

/// `E ⊕_g E'` over `M ⊕ M'`, with `L ×_g L'` spanned by the canonical
/// kernel basis of `(π, −π')`.
pub fn sum_over_g(e: &CrossedExtension, e2: &CrossedExtension) -> Result<CrossedExtension, ExtensionError> {
    if e.n() != e2.n() {
        return Err(ExtensionError::LengthMismatch { left: e.n(), right: e2.n() });
    }
    if e.g() != e2.g() {
        return Err(ExtensionError::BaseMismatch("extensions of different Lie algebras".into()));
    }
    let field = e.g().field();
    let (l1, l2) = (e.base().algebra(), e2.base().algebra());
    let (d1, d2) = (l1.dim(), l2.dim());
    let fibre = kernel(&e.pi().juxtapose(&e2.pi().neg()));
    let basis = fibre.basis_vectors();
    let incl = Matrix::from_columns(field, d1 + d2, &basis);
    let k = Arc::new(l1.direct_sum(l2).subalgebra(&incl)?);
    let (v1, v2) = (e.base().module(), e2.base().module());
    let actions = basis
        .iter()
        .map(|b| v1.act(&b[..d1]).block_diag(&v2.act(&b[d1..])))
        .collect();
    let v = Representation::new(k.clone(), v1.dim() + v2.dim(), actions)?;
    let stacked = e.base().partial().direct_sum(e2.base().partial());
    let cols: Vec<Vec<Scalar>> = (0..v.dim())
        .map(|c| fibre.coordinates(&stacked.image_of_basis(c)).expect("∂ lands in the fibre product"))
        .collect();
    let partial = LinearMap::from_images(field, k.dim(), &cols);
    let base = CrossedModule::new(v, partial).map_err(ExtensionError::BaseNotCrossed)?;
    let pi = e.pi().juxtapose(&LinearMap::zero(field, d2, e.g().dim())).compose(&LinearMap::new(incl));
    let chain = e.chain().iter().zip(e2.chain()).map(|(a, b)| a.direct_sum(b)).collect::<Result<Vec<_>, _>>()?;
    let maps = e.maps().iter().zip(e2.maps()).map(|(a, b)| a.direct_sum(b)).collect();
    let m = e.kernel_module().direct_sum(e2.kernel_module())?;
    CrossedExtension::new(m, e.head().direct_sum(e2.head()), chain, maps, base, pi)
}

/// `∇_M: M ⊕ M → M`
pub fn codiagonal(m: &Representation) -> ModuleMorphism {
    let field = m.field();
    let id = LinearMap::identity(field, m.dim());
    ModuleMorphism::new(m.direct_sum(m).expect("same algebra"), m.clone(), id.juxtapose(&id)).expect("∇ is equivariant")
}

/// `E + E' = ∇_M(E ⊕_g E')`. For `n = 2` this is the pushout of `V ⊕ V'`
/// along `∇_M`, as a crossed module over `L ×_g L'`.
pub fn baer_sum(e: &CrossedExtension, e2: &CrossedExtension) -> Result<CrossedExtension, ExtensionError> {
    if e.kernel_module() != e2.kernel_module() {
        return Err(ExtensionError::BaseMismatch("extensions of different modules".into()));
    }
    let sum = sum_over_g(e, e2)?;
    push_forward(&codiagonal(e.kernel_module()), &sum)
}

/// Baer sum of two crossed modules over the same `(g, M)`.
pub fn baer_sum_n2(
    a: (&CrossedModule, &InducedPair),
    b: (&CrossedModule, &InducedPair),
) -> Result<(CrossedModule, InducedPair), ExtensionError> {
    if a.1.g() != b.1.g() || a.1.kernel() != b.1.kernel() {
        return Err(ExtensionError::BaseMismatch("crossed modules over different (g, M)".into()));
    }
    let e = CrossedExtension::from_crossed_module(a.0, a.1);
    let e2 = CrossedExtension::from_crossed_module(b.0, b.1);
    baer_sum(&e, &e2)?.to_crossed_module()
}

/// `[θ] ∈ H³(g, M)` of a length-2 extension.
pub fn classify_n2(e: &CrossedExtension) -> Result<CohomologyClass, ExtensionError> {
    let (cm, pair) = e.to_crossed_module()?;
    Ok(classify2(&cm, &pair)?)
}

/// A retraction `r` of `f` together with the resulting morphism to the zero
/// extension.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SplitWitness {
    pub retraction: LinearMap,
    pub target: CrossedExtension,
    pub morphism: ExtensionMorphism,
}

/// Looks for a `g`-module map `r: M_{n−1} → M` with `r f = id`, solving the
/// linear system exactly; `None` when it has no solution.
pub fn split_detect(e: &CrossedExtension) -> Result<Option<SplitWitness>, ExtensionError> {
    let n = e.n();
    if n < 3 {
        return Err(ExtensionError::UnsupportedLength { n });
    }
    let g = e.g();
    let field = g.field();
    let (m, top) = (e.kernel_module(), &e.chain()[0]);
    let (rows_r, cols_r) = (m.dim(), top.dim());
    let unknown = |r: usize, c: usize| r * cols_r + c;
    let f = e.head().matrix();
    let mut eqs: Vec<Vec<Scalar>> = Vec::new();
    let mut rhs: Vec<Scalar> = Vec::new();
    // r f = id
    for r in 0..rows_r {
        for c in 0..rows_r {
            let mut row = vec![field.zero(); rows_r * cols_r];
            for k in 0..cols_r {
                row[unknown(r, k)] = f.get(k, c).clone();
            }
            eqs.push(row);
            rhs.push(if r == c { field.one() } else { field.zero() });
        }
    }
    // r ρ_top(x) − ρ_M(x) r = 0
    for x in 0..g.dim() {
        let (a, b) = (top.action(x), m.action(x));
        for r in 0..rows_r {
            for c in 0..cols_r {
                let mut row = vec![field.zero(); rows_r * cols_r];
                for k in 0..cols_r {
                    row[unknown(r, k)] += a.get(k, c);
                }
                for k in 0..rows_r {
                    row[unknown(k, c)] -= b.get(r, k);
                }
                eqs.push(row);
                rhs.push(field.zero());
            }
        }
    }
    let system = LinearMap::new(Matrix::from_rows(field, rows_r * cols_r, eqs));
    let Some(sol) = solve(&system, &rhs) else {
        return Ok(None);
    };
    let retraction = LinearMap::new(Matrix::from_rows(
        field,
        cols_r,
        sol.chunks(cols_r.max(1)).take(rows_r).map(|c| c.to_vec()).collect(),
    ));
    let target = zero_extension(m, n);
    let mut deltas = vec![retraction.clone()];
    deltas.extend(e.chain()[1..].iter().map(|c| LinearMap::zero(field, c.dim(), 0)));
    deltas.push(LinearMap::zero(field, e.base().module().dim(), 0));
    let morphism = ExtensionMorphism { alpha: LinearMap::identity(field, m.dim()), deltas, beta: e.pi().clone() };
    check_extension_morphism(e, &target, &morphism)?;
    Ok(Some(SplitWitness { retraction, target, morphism }))
}

/// `δE`: `0 → M →α M' →fβ M_{n−1} → ⋯ → L → g → 0` for an extension `E` of
/// `g` by `M''`.
pub fn opext_connecting(ses: &ShortExactSequence, e: &CrossedExtension) -> Result<CrossedExtension, ExtensionError> {
    if e.kernel_module() != ses.quotient() {
        return Err(ExtensionError::BaseMismatch("the extension is not by the quotient module".into()));
    }
    let (_, head, chain, maps, base, pi) = e.clone().into_parts();
    let mut new_chain = vec![ses.middle().clone()];
    new_chain.extend(chain);
    let mut new_maps = vec![head.compose(ses.beta().map())];
    new_maps.extend(maps);
    CrossedExtension::new(ses.sub().clone(), ses.alpha().map().clone(), new_chain, new_maps, base, pi)
}
