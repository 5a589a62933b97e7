use crate::crossed::{check_crossed_morphism, CrossedMorphism};
use crate::exactlin::LinearMap;

use super::{CrossedExtension, ExtensionError};

/// `(α, δ_{n−1}, …, δ_1, β)` between two extensions of the same `g`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExtensionMorphism {
    pub alpha: LinearMap,
    /// `δ_{n−1}, …, δ_1`
    pub deltas: Vec<LinearMap>,
    pub beta: LinearMap,
}

impl ExtensionMorphism {
    pub fn identity(e: &CrossedExtension) -> Self {
        let field = e.g().field();
        let mut deltas: Vec<LinearMap> = e.chain().iter().map(|c| LinearMap::identity(field, c.dim())).collect();
        deltas.push(LinearMap::identity(field, e.base().module().dim()));
        ExtensionMorphism {
            alpha: LinearMap::identity(field, e.kernel_module().dim()),
            deltas,
            beta: LinearMap::identity(field, e.base().algebra().dim()),
        }
    }
}

/// All squares commute, `π'β = π`, `α` and the `δ_i` with `i ≥ 2` are
/// `g`-module maps and `(δ_1, β)` is a map of crossed modules.
pub fn check_extension_morphism(
    source: &CrossedExtension,
    target: &CrossedExtension,
    phi: &ExtensionMorphism,
) -> Result<(), ExtensionError> {
    let n = source.n();
    if target.n() != n {
        return Err(ExtensionError::LengthMismatch { left: n, right: target.n() });
    }
    if source.g() != target.g() {
        return Err(ExtensionError::BaseMismatch("extensions of different Lie algebras".into()));
    }
    if phi.deltas.len() != n - 1 {
        return Err(ExtensionError::Shape(format!("expected {} maps δ_i", n - 1)));
    }
    let names = source.node_names();
    // Source and target maps leaving M, M_{n−1}, …, M_1.
    let outgoing = |e: &CrossedExtension| -> Vec<LinearMap> {
        let mut v = vec![e.head().clone()];
        v.extend(e.maps().iter().cloned());
        v.push(e.base().partial().clone());
        v
    };
    let (src, tgt) = (outgoing(source), outgoing(target));
    let verticals: Vec<&LinearMap> = std::iter::once(&phi.alpha).chain(&phi.deltas).chain(std::iter::once(&phi.beta)).collect();
    for k in 0..n {
        let (a, b) = (verticals[k], verticals[k + 1]);
        if a.domain_dim() != src[k].domain_dim()
            || a.codomain_dim() != tgt[k].domain_dim()
            || b.domain_dim() != src[k].codomain_dim()
            || b.codomain_dim() != tgt[k].codomain_dim()
        {
            return Err(ExtensionError::Shape(format!("vertical maps at {} have the wrong shape", names[k])));
        }
        if tgt[k].compose(a) != b.compose(&src[k]) {
            return Err(ExtensionError::SquareFail { position: names[k].clone() });
        }
    }
    if target.pi().compose(&phi.beta) != *source.pi() {
        return Err(ExtensionError::NotIdentityOnG);
    }
    // α is reported under index n, the position of M.
    let pairs = std::iter::once((source.kernel_module(), target.kernel_module(), &phi.alpha, n))
        .chain(source.chain().iter().zip(target.chain()).zip(&phi.deltas).enumerate().map(|(k, ((s, t), d))| (s, t, d, n - 1 - k)));
    for (s, t, d, i) in pairs {
        for x in 0..source.g().dim() {
            if d.matrix().mul(s.action(x)) != t.action(x).mul(d.matrix()) {
                return Err(ExtensionError::NotGModuleMap { i });
            }
        }
    }
    let crossed = CrossedMorphism { alpha: phi.deltas[n - 2].clone(), beta: phi.beta.clone() };
    check_crossed_morphism(source.base(), target.base(), &crossed, None)?;
    Ok(())
}
