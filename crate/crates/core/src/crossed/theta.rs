use crate::algebra::StructureConstants;
use crate::cohomology::{class_of, tuples, Cochain, CohomologyClass, Flavor};
use crate::exactlin::{image, linear_section, vector, Field, LinearMap, Scalar, Subspace};

use super::lie::{CrossedModule, InducedPair};
use super::CrossedError;

/// Linear sections `s: g → L` with `π s = id` and `q: L → V` with
/// `∂ q = id` on `im ∂`. Only the restriction of `q` to `im ∂` matters.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Sections {
    pub s: LinearMap,
    pub q: LinearMap,
}

pub(crate) fn pivot_sections(projection: &LinearMap, partial: &LinearMap) -> Sections {
    Sections { s: linear_section(projection), q: linear_section(partial) }
}

pub(crate) fn check_sections(projection: &LinearMap, partial: &LinearMap, sections: &Sections) -> Result<(), CrossedError> {
    let field = projection.field();
    let (l, g, v) = (projection.domain_dim(), projection.codomain_dim(), partial.domain_dim());
    if sections.s.domain_dim() != g || sections.s.codomain_dim() != l {
        return Err(CrossedError::SectionMismatch(format!("s must be {l}x{g}")));
    }
    if sections.q.domain_dim() != l || sections.q.codomain_dim() != v {
        return Err(CrossedError::SectionMismatch(format!("q must be {v}x{l}")));
    }
    if projection.compose(&sections.s) != LinearMap::identity(field, g) {
        return Err(CrossedError::SectionMismatch("π∘s is not the identity".into()));
    }
    for y in image(partial).basis_vectors() {
        if partial.apply(&sections.q.apply(&y)) != y {
            return Err(CrossedError::SectionMismatch("∂∘q is not the identity on im ∂".into()));
        }
    }
    Ok(())
}

/// The defect `g(a, b) = q([s a, s b] − s[a, b])` on basis pairs of the base.
pub(crate) struct Defect {
    pub lifts: Vec<Vec<Scalar>>,
    table: Vec<Vec<Scalar>>,
    dim: usize,
    v_dim: usize,
    field: Field,
}

impl Defect {
    pub fn new(base: &StructureConstants, total: &StructureConstants, sections: &Sections) -> Self {
        let d = base.dim();
        let lifts: Vec<Vec<Scalar>> = (0..d).map(|i| sections.s.image_of_basis(i)).collect();
        let mut table = Vec::with_capacity(d * d);
        for a in 0..d {
            for b in 0..d {
                let lhs = total.bracket(&lifts[a], &lifts[b]);
                let rhs = sections.s.apply(base.bracket_basis(a, b));
                table.push(sections.q.apply(&vector::sub(&lhs, &rhs)));
            }
        }
        Defect { lifts, table, dim: d, v_dim: sections.q.codomain_dim(), field: base.field() }
    }

    pub fn at(&self, a: usize, b: usize) -> &[Scalar] {
        &self.table[a * self.dim + b]
    }

    /// `g(Σ_k w_k e_k, e_b)`
    pub fn first_combo(&self, w: &[Scalar], b: usize) -> Vec<Scalar> {
        let mut out = vector::zeros(self.field, self.v_dim);
        for (k, c) in w.iter().enumerate() {
            if !c.is_zero() {
                vector::axpy(&mut out, c, self.at(k, b));
            }
        }
        out
    }

    /// `g(e_a, Σ_k w_k e_k)`
    pub fn second_combo(&self, a: usize, w: &[Scalar]) -> Vec<Scalar> {
        let mut out = vector::zeros(self.field, self.v_dim);
        for (k, c) in w.iter().enumerate() {
            if !c.is_zero() {
                vector::axpy(&mut out, c, self.at(a, k));
            }
        }
        out
    }
}

/// A `V`-valued trilinear form on the base, tabulated on all basis triples.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ThetaTable {
    dim: usize,
    field: Field,
    values: Vec<Vec<Scalar>>,
}

impl ThetaTable {
    pub(crate) fn tabulate(dim: usize, field: Field, mut f: impl FnMut(usize, usize, usize) -> Vec<Scalar>) -> Self {
        let mut values = Vec::with_capacity(dim * dim * dim);
        for i in 0..dim {
            for j in 0..dim {
                for k in 0..dim {
                    values.push(f(i, j, k));
                }
            }
        }
        ThetaTable { dim, field, values }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn value(&self, i: usize, j: usize, k: usize) -> &[Scalar] {
        &self.values[(i * self.dim + j) * self.dim + k]
    }

    /// Zero on repeated arguments and negated by each transposition.
    pub fn is_alternating(&self) -> bool {
        let d = self.dim;
        for i in 0..d {
            for j in 0..d {
                for k in 0..d {
                    let v = self.value(i, j, k);
                    if (i == j || j == k || i == k) && !vector::is_zero(v) {
                        return false;
                    }
                    let neg = vector::scale(v, &-self.field.one());
                    if self.value(j, i, k) != neg.as_slice() || self.value(i, k, j) != neg.as_slice() {
                        return false;
                    }
                }
            }
        }
        true
    }

    pub fn values_in(&self, sub: &Subspace) -> bool {
        self.values.iter().all(|v| sub.contains(v))
    }

    /// Pull the values back along the injective `inclusion` and store the
    /// result as a cochain of the given flavour (increasing triples only for
    /// the alternating flavour).
    pub fn to_cochain(&self, flavor: Flavor, inclusion: &LinearMap) -> Result<Cochain, CrossedError> {
        let back = linear_section(inclusion);
        let m = inclusion.domain_dim();
        let wanted = tuples::tuples(flavor, self.dim, 3);
        for t in &wanted {
            let v = self.value(t[0], t[1], t[2]);
            if inclusion.apply(&back.apply(v)) != v {
                return Err(CrossedError::Shape(format!("θ{t:?} does not lie in ker ∂")));
            }
        }
        Ok(Cochain::from_fn(flavor, self.field, self.dim, m, 3, |t| back.apply(self.value(t[0], t[1], t[2]))))
    }
}

/// Deterministic sections: pivot-based generalized inverses of `π` and `∂`.
pub fn choose_sections(cm: &CrossedModule, pair: &InducedPair) -> Sections {
    pivot_sections(pair.projection(), cm.partial())
}

fn lie_theta_eval<'a>(cm: &'a CrossedModule, pair: &'a InducedPair, sections: &Sections) -> impl Fn(usize, usize, usize) -> Vec<Scalar> + 'a {
    let g = pair.g();
    let defect = Defect::new(g, cm.algebra(), sections);
    let v = cm.module();
    move |x, y, z| {
        let mut out = v.act_on(&defect.lifts[x], defect.at(y, z));
        out = vector::sub(&out, &v.act_on(&defect.lifts[y], defect.at(x, z)));
        out = vector::add(&out, &v.act_on(&defect.lifts[z], defect.at(x, y)));
        out = vector::sub(&out, &defect.first_combo(g.bracket_basis(x, y), z));
        out = vector::add(&out, &defect.first_combo(g.bracket_basis(x, z), y));
        vector::sub(&out, &defect.first_combo(g.bracket_basis(y, z), x))
    }
}

/// `θ(x,y,z) = [s x, g(y,z)] − [s y, g(x,z)] + [s z, g(x,y)] − g([x,y],z)
/// + g([x,z],y) − g([y,z],x)`, tabulated on every basis triple.
pub fn theta_table(cm: &CrossedModule, pair: &InducedPair, sections: &Sections) -> Result<ThetaTable, CrossedError> {
    check_sections(pair.projection(), cm.partial(), sections)?;
    let eval = lie_theta_eval(cm, pair, sections);
    Ok(ThetaTable::tabulate(pair.g().dim(), cm.algebra().field(), eval))
}

/// `θ` as a 3-cochain of `g` with values in `M`, evaluated on increasing
/// triples.
pub fn theta(cm: &CrossedModule, pair: &InducedPair, sections: &Sections) -> Result<Cochain, CrossedError> {
    check_sections(pair.projection(), cm.partial(), sections)?;
    let eval = lie_theta_eval(cm, pair, sections);
    let back = linear_section(pair.inclusion());
    let field = cm.algebra().field();
    let mut out = Cochain::zero(Flavor::ChevalleyEilenberg, field, pair.g().dim(), pair.kernel().dim(), 3);
    for t in tuples::combinations(pair.g().dim(), 3) {
        let v = eval(t[0], t[1], t[2]);
        let m = back.apply(&v);
        if pair.inclusion().apply(&m) != v {
            return Err(CrossedError::Shape(format!("θ{t:?} does not lie in ker ∂")));
        }
        out.set(&t, &m);
    }
    Ok(out)
}

/// `[θ] ∈ H³(g, M)` computed with the pivot sections.
pub fn classify2(cm: &CrossedModule, pair: &InducedPair) -> Result<CohomologyClass, CrossedError> {
    classify2_with(cm, pair, &choose_sections(cm, pair))
}

pub fn classify2_with(cm: &CrossedModule, pair: &InducedPair, sections: &Sections) -> Result<CohomologyClass, CrossedError> {
    let z = theta(cm, pair, sections)?;
    Ok(class_of(pair.kernel(), &z)?)
}
