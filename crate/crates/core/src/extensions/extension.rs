use std::sync::Arc;

use crate::algebra::{LieAlgebra, Representation};
use crate::crossed::{CrossedModule, InducedPair};
use crate::exactlin::{image, kernel, linear_section, LinearMap, Scalar};

use super::ExtensionError;

/// `0 → M →f M_{n−1} → ⋯ → M_2 → M_1 →∂₁ L →π g → 0`.
///
/// `chain` holds the `g`-modules `M_{n−1}, …, M_2` and `maps` the maps
/// `∂_{n−1}, …, ∂_2` in the same order; both are empty when `n = 2`, in
/// which case `f` lands directly in `M_1`. The base `(M_1, L, ∂_1)` is a
/// crossed module.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CrossedExtension {
    m: Representation,
    head: LinearMap,
    chain: Vec<Representation>,
    maps: Vec<LinearMap>,
    base: CrossedModule,
    pi: LinearMap,
}

impl CrossedExtension {
    pub fn new(
        m: Representation,
        head: LinearMap,
        chain: Vec<Representation>,
        maps: Vec<LinearMap>,
        base: CrossedModule,
        pi: LinearMap,
    ) -> Result<Self, ExtensionError> {
        let e = Self::new_unchecked(m, head, chain, maps, base, pi)?;
        e.validate()?;
        Ok(e)
    }

    /// Checks shapes and that every `g`-module is over the same `g`.
    pub fn new_unchecked(
        m: Representation,
        head: LinearMap,
        chain: Vec<Representation>,
        maps: Vec<LinearMap>,
        base: CrossedModule,
        pi: LinearMap,
    ) -> Result<Self, ExtensionError> {
        if chain.len() != maps.len() {
            return Err(ExtensionError::Shape("one map per intermediate module is required".into()));
        }
        let g = m.algebra();
        if chain.iter().any(|c| c.algebra() != g) {
            return Err(ExtensionError::BaseMismatch("intermediate modules must be over g".into()));
        }
        if pi.domain_dim() != base.algebra().dim() || pi.codomain_dim() != g.dim() {
            return Err(ExtensionError::Shape("pi must map L to g".into()));
        }
        let dims: Vec<usize> = std::iter::once(m.dim())
            .chain(chain.iter().map(|c| c.dim()))
            .chain(std::iter::once(base.module().dim()))
            .collect();
        if head.domain_dim() != dims[0] || head.codomain_dim() != dims[1] {
            return Err(ExtensionError::Shape("f has the wrong shape".into()));
        }
        for (k, d) in maps.iter().enumerate() {
            if d.domain_dim() != dims[k + 1] || d.codomain_dim() != dims[k + 2] {
                return Err(ExtensionError::Shape(format!("∂_{} has the wrong shape", dims.len() - 1 - k)));
            }
        }
        Ok(CrossedExtension { m, head, chain, maps, base, pi })
    }

    /// A crossed module with an identification of its cokernel and kernel.
    pub fn from_crossed_module(cm: &CrossedModule, pair: &InducedPair) -> Self {
        CrossedExtension {
            m: pair.kernel().clone(),
            head: pair.inclusion().clone(),
            chain: Vec::new(),
            maps: Vec::new(),
            base: cm.clone(),
            pi: pair.projection().clone(),
        }
    }

    /// The `n = 2` case read back as a crossed module with its induced pair.
    pub fn to_crossed_module(&self) -> Result<(CrossedModule, InducedPair), ExtensionError> {
        if self.n() != 2 {
            return Err(ExtensionError::UnsupportedLength { n: self.n() });
        }
        let pair = InducedPair::framed(&self.base, self.pi.clone(), self.m.clone(), self.head.clone())
            .map_err(ExtensionError::BaseNotCrossed)?;
        Ok((self.base.clone(), pair))
    }

    pub fn n(&self) -> usize {
        self.chain.len() + 2
    }

    pub fn g(&self) -> &Arc<LieAlgebra> {
        self.m.algebra()
    }

    /// `M`
    pub fn kernel_module(&self) -> &Representation {
        &self.m
    }

    /// `f: M → M_{n−1}`
    pub fn head(&self) -> &LinearMap {
        &self.head
    }

    /// `M_{n−1}, …, M_2`
    pub fn chain(&self) -> &[Representation] {
        &self.chain
    }

    /// `∂_{n−1}, …, ∂_2`
    pub fn maps(&self) -> &[LinearMap] {
        &self.maps
    }

    pub fn base(&self) -> &CrossedModule {
        &self.base
    }

    pub fn pi(&self) -> &LinearMap {
        &self.pi
    }

    /// `M_i` for `2 ≤ i ≤ n−1`.
    pub fn module_at(&self, i: usize) -> &Representation {
        &self.chain[self.n() - 1 - i]
    }

    /// `∂_i` for `1 ≤ i ≤ n−1`.
    pub fn partial_at(&self, i: usize) -> &LinearMap {
        if i == 1 {
            self.base.partial()
        } else {
            &self.maps[self.n() - 1 - i]
        }
    }

    /// The same extension with `f` replaced.
    pub fn with_head(&self, head: LinearMap) -> Result<Self, ExtensionError> {
        Self::new_unchecked(
            self.m.clone(),
            head,
            self.chain.clone(),
            self.maps.clone(),
            self.base.clone(),
            self.pi.clone(),
        )
    }

    pub(crate) fn into_parts(
        self,
    ) -> (Representation, LinearMap, Vec<Representation>, Vec<LinearMap>, CrossedModule, LinearMap) {
        (self.m, self.head, self.chain, self.maps, self.base, self.pi)
    }

    /// Node names from left to right: `M, M_{n−1}, …, M_1, L, g`.
    pub fn node_names(&self) -> Vec<String> {
        let n = self.n();
        let mut names = vec!["M".to_string()];
        names.extend((1..n).rev().map(|i| format!("M_{i}")));
        names.push("L".into());
        names.push("g".into());
        names
    }

    /// Checks, in order: the base is a crossed module, `π` is a Lie map,
    /// exactness at `M_{n−1}, …, M_1, L`, injectivity of `f` (exactness at
    /// `M`), surjectivity of `π` (exactness at `g`), then that `f` and the
    /// `∂_i` with `i ≥ 2` are `g`-module maps.
    pub fn validate(&self) -> Result<(), ExtensionError> {
        self.base.validate().map_err(ExtensionError::BaseNotCrossed)?;
        self.m.validate()?;
        for c in &self.chain {
            c.validate()?;
        }
        self.base.algebra().check_homomorphism(&self.pi, self.g())?;
        for (position, ok) in self.exactness() {
            if !ok {
                return Err(ExtensionError::ExactnessFail { position });
            }
        }
        self.check_equivariance()
    }

    /// Exactness at each node, in the order `validate` reports them.
    pub fn exactness(&self) -> Vec<(String, bool)> {
        let names = self.node_names();
        let n = self.n();
        // Incoming and outgoing maps at M_{n−1}, …, M_1, L.
        let mut incoming: Vec<&LinearMap> = vec![&self.head];
        incoming.extend(self.maps.iter());
        incoming.push(self.base.partial());
        let mut outgoing: Vec<&LinearMap> = self.maps.iter().collect();
        outgoing.push(self.base.partial());
        outgoing.push(&self.pi);
        let mut out = Vec::with_capacity(n + 2);
        for k in 0..n {
            out.push((names[k + 1].clone(), image(incoming[k]) == kernel(outgoing[k])));
        }
        out.push((names[0].clone(), self.head.is_injective()));
        out.push((names[n + 1].clone(), self.pi.is_surjective()));
        out
    }

    fn check_equivariance(&self) -> Result<(), ExtensionError> {
        let n = self.n();
        let g = self.g().clone();
        let lifts: Vec<Vec<Scalar>> = {
            let s = linear_section(&self.pi);
            (0..g.dim()).map(|i| s.image_of_basis(i)).collect()
        };
        // M_1 is only an L-module; g acts on the image of ∂_2 through lifts.
        let mut sources: Vec<&Representation> = vec![&self.m];
        sources.extend(self.chain.iter());
        let mut maps: Vec<&LinearMap> = vec![&self.head];
        maps.extend(self.maps.iter());
        for (k, (map, src)) in maps.iter().zip(&sources).enumerate() {
            let index = n - k;
            for x in 0..g.dim() {
                let act_tgt = if k + 1 < sources.len() {
                    sources[k + 1].action(x).clone()
                } else {
                    self.base.module().act(&lifts[x])
                };
                let lhs = map.matrix().mul(src.action(x));
                let rhs = act_tgt.mul(map.matrix());
                if lhs != rhs {
                    return Err(ExtensionError::NotGModuleMap { i: index });
                }
            }
        }
        Ok(())
    }
}
