#![allow(dead_code)]

pub mod oracle;

use std::sync::Arc;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crossed_ext::algebra::{
    adjoint, catalog, LeibnizAlgebra, LeibnizModule, LeibnizModuleMorphism, LieAlgebra, Representation,
};
use crossed_ext::cohomology::{apply_coboundary, cohomology, Cochain, Coefficients, ShortExactSequence};
use crossed_ext::crossed::{
    leibniz_yoneda_crossed_module, yoneda_crossed_module, CrossedModule, InducedPair, LeibnizCrossedModule,
    LeibnizInducedPair,
};
use crossed_ext::exactlin::{kernel, vector, Field, LinearMap, Matrix, Scalar, Subspace};

pub fn q() -> Field {
    Field::Rational
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn mat(rows: &[&[i64]]) -> Matrix {
    Matrix::from_i64(q(), rows)
}

pub fn lin(rows: &[&[i64]]) -> LinearMap {
    LinearMap::new(mat(rows))
}

pub fn small(rng: &mut impl Rng) -> Scalar {
    q().from_i64(rng.gen_range(-2..=2))
}

pub fn random_matrix(rng: &mut impl Rng, rows: usize, cols: usize) -> Matrix {
    let data = (0..rows).map(|_| (0..cols).map(|_| small(rng)).collect()).collect();
    Matrix::from_rows(q(), cols, data)
}

pub fn random_vector(rng: &mut impl Rng, n: usize) -> Vec<Scalar> {
    (0..n).map(|_| small(rng)).collect()
}

/// Unit lower triangular times unit upper triangular, so always invertible.
pub fn random_invertible(rng: &mut impl Rng, n: usize) -> Matrix {
    let mut lo = Matrix::identity(q(), n);
    let mut up = Matrix::identity(q(), n);
    for i in 0..n {
        for j in 0..i {
            lo.set(i, j, q().from_i64(rng.gen_range(-1..=1)));
            up.set(j, i, q().from_i64(rng.gen_range(-1..=1)));
        }
    }
    lo.mul(&up)
}

/// Linear functionals on the algebra that vanish on `[g, g]`, as vectors.
fn abelian_functionals(derived: &Subspace) -> Vec<Vec<Scalar>> {
    kernel(&LinearMap::new(derived.basis().clone())).basis_vectors()
}

/// For each basis vector `e_i`, `Σ_k φ_k(e_i) A^k` with the `φ_k` vanishing
/// on the derived algebra. These commute and kill brackets.
fn polynomial_actions(
    rng: &mut impl Rng,
    derived: &Subspace,
    d: usize,
    a: &Matrix,
    with_constant: bool,
) -> Vec<Matrix> {
    let k = a.rows();
    let funcs = abelian_functionals(derived);
    let mut powers = vec![Matrix::identity(q(), k)];
    for _ in 0..2 {
        powers.push(powers.last().unwrap().mul(a));
    }
    let start = if with_constant { 0 } else { 1 };
    let phis: Vec<Vec<Scalar>> = (start..powers.len())
        .map(|_| {
            let mut phi = vector::zeros(q(), d);
            for f in &funcs {
                vector::axpy(&mut phi, &small(rng), f);
            }
            phi
        })
        .collect();
    (0..d)
        .map(|i| {
            let mut m = Matrix::zeros(q(), k, k);
            for (phi, p) in phis.iter().zip(&powers[start..]) {
                m = m.add(&p.scale(&phi[i]));
            }
            m
        })
        .collect()
}

fn random_a(rng: &mut impl Rng, k: usize) -> Matrix {
    let mut a = random_matrix(rng, k, k);
    if rng.gen_bool(0.5) {
        for i in 0..k {
            for j in 0..i {
                a.set(i, j, q().zero());
            }
        }
    }
    a
}

/// Named Lie algebras up to dimension 5; the flag marks an sl2 summand in
/// the first three coordinates.
pub fn lie_bases() -> Vec<(String, LieAlgebra, bool)> {
    let ab = |n| LieAlgebra::abelian(q(), n);
    let mut out: Vec<(String, LieAlgebra, bool)> = (1..=5).map(|n| (format!("ab{n}"), ab(n), false)).collect();
    let sl2 = catalog::sl2(q());
    out.push(("sl2".into(), sl2.clone(), true));
    out.push(("sl2+ab1".into(), sl2.direct_sum(&ab(1)), true));
    out.push(("sl2+ab2".into(), sl2.direct_sum(&ab(2)), true));
    for (name, g) in [
        ("heisenberg", catalog::heisenberg(q())),
        ("so3", catalog::so3(q())),
        ("borel2", catalog::borel2(q())),
    ] {
        out.push((name.into(), g.clone(), false));
        out.push((format!("{name}+ab1"), g.direct_sum(&ab(1)), false));
    }
    out.push(("heisenberg+ab2".into(), catalog::heisenberg(q()).direct_sum(&ab(2)), false));
    let aff = catalog::affine2(q());
    out.push(("affine2".into(), aff.clone(), false));
    for n in 1..=3 {
        out.push((format!("affine2+ab{n}"), aff.direct_sum(&ab(n)), false));
    }
    out.push(("affine2+affine2".into(), aff.direct_sum(&aff), false));
    out.push(("filiform4".into(), catalog::filiform4(q()), false));
    out.push(("filiform4+ab1".into(), catalog::filiform4(q()).direct_sum(&ab(1)), false));
    out
}

fn sl2_standard(g: &Arc<LieAlgebra>) -> Representation {
    let mut actions = vec![mat(&[&[0, 1], &[0, 0]]), mat(&[&[0, 0], &[1, 0]]), mat(&[&[1, 0], &[0, -1]])];
    actions.extend((3..g.dim()).map(|_| Matrix::zeros(q(), 2, 2)));
    Representation::new(g.clone(), 2, actions).expect("standard sl2 module")
}

/// A random module of dimension at most 4 over `g`, described by a label.
fn random_module(rng: &mut impl Rng, g: &Arc<LieAlgebra>, has_sl2: bool) -> (String, Representation) {
    let d = g.dim();
    let mut kinds = vec!["trivial", "abelianized", "abelianized"];
    if d <= 4 {
        kinds.extend(["adjoint", "dual"]);
    }
    if d <= 3 {
        kinds.push("adjoint+trivial");
    }
    if has_sl2 {
        kinds.extend(["std", "std+trivial", "std+std"]);
    }
    let kind = *kinds.choose(rng).unwrap();
    let rep = match kind {
        "trivial" => Representation::trivial(g.clone(), rng.gen_range(1..=4)),
        "adjoint" => adjoint(g),
        "dual" => adjoint(g).dual(),
        "adjoint+trivial" => adjoint(g).direct_sum(&Representation::trivial(g.clone(), 1)).unwrap(),
        "std" => sl2_standard(g),
        "std+trivial" => {
            sl2_standard(g).direct_sum(&Representation::trivial(g.clone(), rng.gen_range(1..=2))).unwrap()
        }
        "std+std" => sl2_standard(g).direct_sum(&sl2_standard(g)).unwrap(),
        _ => {
            let k = rng.gen_range(1..=4);
            let a = random_a(rng, k);
            let actions = polynomial_actions(rng, &g.structure().derived(), d, &a, true);
            Representation::new(g.clone(), k, actions).expect("abelianized module")
        }
    };
    (kind.to_string(), rep)
}

/// A random valid `(g, M)` with `dim g ≤ 5`, `dim M ≤ 4`, presented in a
/// random basis of both.
pub fn random_lie_pair(rng: &mut impl Rng) -> (String, Representation) {
    let bases = lie_bases();
    let (name, g, has_sl2) = bases.choose(rng).unwrap().clone();
    let g = Arc::new(g);
    let (kind, rep) = random_module(rng, &g, has_sl2);
    let p = random_invertible(rng, g.dim());
    let g2 = Arc::new(g.change_basis(&p).unwrap());
    let rep = rep.pullback(g2, &LinearMap::new(p)).unwrap();
    let qm = random_invertible(rng, rep.dim());
    let rep = rep.change_basis(&qm).unwrap();
    rep.validate().expect("generated module is valid");
    (format!("{name}/{kind}"), rep)
}

pub fn leibniz_bases() -> Vec<(String, LeibnizAlgebra)> {
    let ab = |n| LieAlgebra::abelian(q(), n).to_leibniz();
    let mut out = Vec::new();
    for (name, h) in [
        ("square_zero", catalog::leibniz_square_zero(q())),
        ("two_squares", catalog::leibniz_two_squares(q())),
        ("right_affine", catalog::leibniz_right_affine(q())),
    ] {
        out.push((name.to_string(), h.clone()));
        out.push((format!("{name}+ab1"), h.direct_sum(&ab(1))));
        if h.dim() == 2 {
            out.push((format!("{name}+ab2"), h.direct_sum(&ab(2))));
            out.push((format!("{name}+ab3"), h.direct_sum(&ab(3))));
        }
    }
    let sum = catalog::leibniz_square_zero(q()).direct_sum(&catalog::leibniz_right_affine(q()));
    out.push(("square_zero+right_affine".into(), sum));
    out
}

/// Transports a Leibniz module to the basis given by the columns of `p`.
pub fn leibniz_change_basis(m: &LeibnizModule, p: &Matrix) -> LeibnizModule {
    let inv = p.inverse().expect("invertible");
    let conj = |a: &Matrix| inv.mul(a).mul(p);
    LeibnizModule::new(
        m.algebra().clone(),
        m.dim(),
        m.lefts().iter().map(conj).collect(),
        m.rights().iter().map(conj).collect(),
    )
    .expect("conjugate module")
}

/// A random valid Leibniz `(h, M)`. Half come from Lie pairs.
pub fn random_leibniz_pair(rng: &mut impl Rng) -> (String, LeibnizModule) {
    if rng.gen_bool(0.4) {
        let (name, rep) = random_lie_pair(rng);
        return (format!("lie:{name}"), LeibnizModule::from_lie(&rep));
    }
    let bases = leibniz_bases();
    let (name, h) = bases.choose(rng).unwrap().clone();
    let h = Arc::new(h);
    let d = h.dim();
    let derived = h.structure().derived();
    let mut kinds = vec!["trivial", "symmetric", "antisymmetric"];
    if d <= 4 {
        kinds.push("adjoint");
    }
    let kind = *kinds.choose(rng).unwrap();
    let module = match kind {
        "trivial" => LeibnizModule::trivial(h.clone(), rng.gen_range(1..=4)),
        "adjoint" => LeibnizModule::adjoint(&h),
        "symmetric" => {
            let k = rng.gen_range(1..=4);
            let a = random_a(rng, k);
            let left = polynomial_actions(rng, &derived, d, &a, true);
            let right = left.iter().map(|m| m.scale(&-q().one())).collect();
            LeibnizModule::new(h.clone(), k, left, right).expect("symmetric module")
        }
        _ => {
            // r = 0 with every left action a multiple of one square-zero matrix
            let k = rng.gen_range(2..=4);
            let left = polynomial_actions(rng, &derived, d, &square_zero(k), false);
            LeibnizModule::new(h.clone(), k, left, vec![Matrix::zeros(q(), k, k); d]).expect("antisymmetric module")
        }
    };
    let p = random_invertible(rng, d);
    let h2 = Arc::new(h.change_basis(&p).unwrap());
    let module = module.pullback(h2, &LinearMap::new(p)).unwrap();
    let qm = random_invertible(rng, module.dim());
    let module = leibniz_change_basis(&module, &qm);
    (format!("{name}/{kind}"), module)
}

fn square_zero(k: usize) -> Matrix {
    let mut n = Matrix::zeros(q(), k, k);
    n.set(0, k - 1, q().one());
    n
}

// ---------------------------------------------------------------------------
// Short exact sequences of g-modules with modules of dimension at most 3.

pub struct SesFixture {
    pub name: &'static str,
    pub ses: ShortExactSequence,
}

fn module(g: &Arc<LieAlgebra>, actions: &[&[&[i64]]]) -> Representation {
    let dim = actions[0].len();
    Representation::new(g.clone(), dim, actions.iter().map(|a| mat(a)).collect()).expect("fixture module")
}

fn span(dim: usize, vectors: &[&[i64]]) -> Subspace {
    let vs: Vec<Vec<Scalar>> = vectors.iter().map(|v| v.iter().map(|&x| q().from_i64(x)).collect()).collect();
    Subspace::span(q(), dim, &vs)
}

fn from_sub(name: &'static str, mid: &Representation, sub: Subspace) -> SesFixture {
    SesFixture { name, ses: ShortExactSequence::from_submodule(mid, &sub).expect("fixture submodule") }
}

pub fn ses_fixtures() -> Vec<SesFixture> {
    let ab2 = Arc::new(LieAlgebra::abelian(q(), 2));
    let ab3 = Arc::new(LieAlgebra::abelian(q(), 3));
    let heis = Arc::new(catalog::heisenberg(q()));
    let aff = Arc::new(catalog::affine2(q()));
    let borel = Arc::new(catalog::borel2(q()));
    let n2: &[&[i64]] = &[&[0, 1], &[0, 0]];
    let n2x2: &[&[i64]] = &[&[0, 2], &[0, 0]];
    let z2: &[&[i64]] = &[&[0, 0], &[0, 0]];
    let n3: &[&[i64]] = &[&[0, 1, 0], &[0, 0, 1], &[0, 0, 0]];
    let z3: &[&[i64]] = &[&[0, 0, 0], &[0, 0, 0], &[0, 0, 0]];
    let e01: &[&[i64]] = &[&[0, 1, 0], &[0, 0, 0], &[0, 0, 0]];
    let e02: &[&[i64]] = &[&[0, 0, 1], &[0, 0, 0], &[0, 0, 0]];
    let unipotent: &[&[i64]] = &[&[1, 1], &[0, 1]];
    let e0_2 = || span(2, &[&[1, 0]]);
    vec![
        from_sub("jordan", &module(&ab3, &[n2, z2, z2]), e0_2()),
        from_sub("jordan_ab2", &module(&ab2, &[n2, n2x2]), e0_2()),
        from_sub("ab3_two_jordan", &module(&ab3, &[n2, n2, z2]), e0_2()),
        from_sub("ab2_jordan3_low", &module(&ab2, &[n3, z3]), span(3, &[&[1, 0, 0]])),
        from_sub("ab2_jordan3_high", &module(&ab2, &[n3, z3]), span(3, &[&[1, 0, 0], &[0, 1, 0]])),
        from_sub("ab3_nilpotent_pair", &module(&ab3, &[e01, e02, z3]), span(3, &[&[1, 0, 0]])),
        from_sub("ab2_unipotent", &module(&ab2, &[unipotent, z2]), e0_2()),
        from_sub("affine_adjoint", &adjoint(&aff), span(2, &[&[0, 1]])),
        from_sub("affine_abelianized", &module(&aff, &[n2, z2]), e0_2()),
        from_sub("heisenberg_center", &adjoint(&heis), span(3, &[&[0, 0, 1]])),
        from_sub("heisenberg_ideal", &adjoint(&heis), span(3, &[&[0, 1, 0], &[0, 0, 1]])),
        from_sub("heisenberg_abelianized", &module(&heis, &[n2, z2, z2]), e0_2()),
        from_sub("borel_derived", &adjoint(&borel), span(3, &[&[0, 1, 0]])),
        SesFixture {
            name: "ab3_split",
            ses: ShortExactSequence::split(
                &Representation::trivial(ab3.clone(), 1),
                &Representation::trivial(ab3.clone(), 1),
            )
            .unwrap(),
        },
    ]
}

/// Representatives of a basis of `H²(g, M'')` followed by two random
/// combinations shifted by random coboundaries.
pub fn two_cocycles(rng: &mut impl Rng, ses: &ShortExactSequence) -> Vec<Cochain> {
    let quot = ses.quotient();
    let mut out: Vec<Cochain> = cohomology(quot, 2).basis.iter().map(|c| c.representative().clone()).collect();
    let basis = out.clone();
    for _ in 0..2 {
        let mut z = quot.zero_cochain(2);
        for b in &basis {
            z = z.add(&b.scale(&small(rng)));
        }
        let one = Cochain::from_vector(
            z.flavor(),
            q(),
            quot.algebra_dim(),
            quot.dim(),
            1,
            random_vector(rng, quot.cochain_dim(1)),
        );
        out.push(z.add(&apply_coboundary(quot, &one)));
    }
    out
}

// ---------------------------------------------------------------------------
// Crossed modules.

pub struct CrossedFixture {
    pub name: String,
    pub cm: CrossedModule,
    pub pair: InducedPair,
}

impl CrossedFixture {
    fn canonical(name: impl Into<String>, cm: CrossedModule) -> Self {
        let pair = cm.induced_pair().expect("induced pair");
        CrossedFixture { name: name.into(), cm, pair }
    }

    pub fn dims(&self) -> (usize, usize) {
        (self.cm.module().dim(), self.cm.algebra().dim())
    }
}

/// `(V, L, ∂)` with `∂ = 0`, `∂ = id`, the inclusion of an ideal, and
/// Yoneda crossed modules of the sequence fixtures. All dims are at most 4
/// unless `large` is set.
pub fn crossed_fixtures(large: bool) -> Vec<CrossedFixture> {
    let ab = |n| Arc::new(LieAlgebra::abelian(q(), n));
    let sl2 = Arc::new(catalog::sl2(q()));
    let heis = Arc::new(catalog::heisenberg(q()));
    let aff = Arc::new(catalog::affine2(q()));
    let borel = Arc::new(catalog::borel2(q()));
    let so3 = Arc::new(catalog::so3(q()));
    let fil = Arc::new(catalog::filiform4(q()));
    let mut out = Vec::new();

    let zero_modules: Vec<(&str, Representation)> = vec![
        ("sl2/ad", adjoint(&sl2)),
        ("sl2/std", sl2_standard(&sl2)),
        ("affine2/ad", adjoint(&aff)),
        ("heisenberg/k", Representation::trivial(heis.clone(), 1)),
        ("borel2/ad", adjoint(&borel)),
        ("ab3/jordan", module(&ab(3), &[&[&[0, 1], &[0, 0]], &[&[0, 0], &[0, 0]], &[&[0, 0], &[0, 0]]])),
        ("filiform4/k", Representation::trivial(fil.clone(), 1)),
    ];
    for (name, m) in zero_modules {
        out.push(CrossedFixture::canonical(format!("zero:{name}"), CrossedModule::zero(&m)));
    }
    for (name, l) in [
        ("sl2", &sl2),
        ("heisenberg", &heis),
        ("affine2", &aff),
        ("borel2", &borel),
        ("so3", &so3),
        ("filiform4", &fil),
        ("ab2", &ab(2)),
    ] {
        out.push(CrossedFixture::canonical(format!("id:{name}"), CrossedModule::identity(l)));
    }
    let ideals: Vec<(&str, &Arc<LieAlgebra>, Subspace)> = vec![
        ("heisenberg>center", &heis, span(3, &[&[0, 0, 1]])),
        ("borel2>derived", &borel, span(3, &[&[0, 1, 0]])),
        ("affine2>derived", &aff, span(2, &[&[0, 1]])),
        ("filiform4>e2e3", &fil, span(4, &[&[0, 0, 1, 0], &[0, 0, 0, 1]])),
    ];
    for (name, l, ideal) in ideals {
        let (v, incl) = adjoint(l).submodule(&ideal).expect("ideal");
        out.push(CrossedFixture::canonical(format!("ideal:{name}"), CrossedModule::new(v, incl).expect("crossed")));
    }
    // V = I ⊕ N with ∂ = (inclusion, 0), where the ideal I acts trivially on N.
    let z2: &[&[i64]] = &[&[0, 0], &[0, 0]];
    let n2: &[&[i64]] = &[&[0, 1], &[0, 0]];
    let heis1 = Arc::new(catalog::heisenberg(q()).direct_sum(&LieAlgebra::abelian(q(), 1)));
    let sl2_1 = Arc::new(catalog::sl2(q()).direct_sum(&LieAlgebra::abelian(q(), 1)));
    let so3_1 = Arc::new(catalog::so3(q()).direct_sum(&LieAlgebra::abelian(q(), 1)));
    let widened: Vec<(&str, &Arc<LieAlgebra>, Subspace, Representation)> = vec![
        ("heisenberg>center+ad", &heis, span(3, &[&[0, 0, 1]]), adjoint(&heis)),
        ("borel2>derived+char", &borel, span(3, &[&[0, 1, 0]]), module(&borel, &[&[&[1]], &[&[0]], &[&[0]]])),
        ("affine2>derived+char", &aff, span(2, &[&[0, 1]]), module(&aff, &[&[&[1]], &[&[0]]])),
        ("affine2>derived+jordan", &aff, span(2, &[&[0, 1]]), module(&aff, &[n2, z2])),
        ("filiform4>e2e3+k", &fil, span(4, &[&[0, 0, 1, 0], &[0, 0, 0, 1]]), Representation::trivial(fil.clone(), 1)),
        ("filiform4>e3+jordan", &fil, span(4, &[&[0, 0, 0, 1]]), module(&fil, &[n2, z2, z2, z2])),
        ("filiform4>e3+k", &fil, span(4, &[&[0, 0, 0, 1]]), Representation::trivial(fil.clone(), 1)),
        ("heisenberg+ab1>center+jordan", &heis1, span(4, &[&[0, 0, 1, 0]]), module(&heis1, &[n2, z2, z2, z2])),
        ("sl2+ab1>center+std", &sl2_1, span(4, &[&[0, 0, 0, 1]]), sl2_standard(&sl2_1)),
        ("so3+ab1>center+k", &so3_1, span(4, &[&[0, 0, 0, 1]]), Representation::trivial(so3_1.clone(), 1)),
    ];
    for (name, l, ideal, extra) in widened {
        let (i, incl) = adjoint(l).submodule(&ideal).expect("ideal");
        let partial = incl.juxtapose(&LinearMap::zero(q(), extra.dim(), l.dim()));
        let v = i.direct_sum(&extra).expect("same algebra");
        out.push(CrossedFixture::canonical(format!("ideal:{name}"), CrossedModule::new(v, partial).expect("crossed")));
    }
    let mut r = rng(7);
    for f in ses_fixtures() {
        for (k, c) in two_cocycles(&mut r, &f.ses).iter().enumerate() {
            let (cm, pair) = yoneda_crossed_module(&f.ses, c).expect("yoneda");
            out.push(CrossedFixture { name: format!("yoneda:{}#{k}", f.name), cm, pair });
        }
    }
    if !large {
        out.retain(|f| f.dims().0 <= 4 && f.dims().1 <= 4);
    }
    out
}

// ---------------------------------------------------------------------------
// Leibniz crossed modules.

pub struct LeibnizCrossedFixture {
    pub name: String,
    pub cm: LeibnizCrossedModule,
    pub pair: LeibnizInducedPair,
}

fn leibniz_module(h: &Arc<LeibnizAlgebra>, left: &[&[&[i64]]], right: &[&[&[i64]]]) -> LeibnizModule {
    let dim = left[0].len();
    LeibnizModule::new(h.clone(), dim, left.iter().map(|a| mat(a)).collect(), right.iter().map(|a| mat(a)).collect())
        .expect("fixture Leibniz module")
}

/// Short exact sequences of Leibniz modules, as `(name, α, β)`.
pub fn leibniz_ses_fixtures() -> Vec<(String, LeibnizModuleMorphism, LeibnizModuleMorphism)> {
    let h = Arc::new(catalog::leibniz_square_zero(q()));
    let h3 = Arc::new(catalog::leibniz_two_squares(q()));
    let z2: &[&[i64]] = &[&[0, 0], &[0, 0]];
    let n2: &[&[i64]] = &[&[0, 1], &[0, 0]];
    let mut out = Vec::new();
    let mk = |mid: LeibnizModule| {
        let k = LeibnizModule::trivial(mid.algebra().clone(), 1);
        let alpha = LeibnizModuleMorphism::new(k.clone(), mid.clone(), lin(&[&[1], &[0]])).unwrap();
        let beta = LeibnizModuleMorphism::new(mid, k, lin(&[&[0, 1]])).unwrap();
        (alpha, beta)
    };
    let (a, b) = mk(leibniz_module(&h, &[n2, z2], &[z2, z2]));
    out.push(("square_zero/left".to_string(), a, b));
    let neg: &[&[i64]] = &[&[0, -1], &[0, 0]];
    let (a, b) = mk(leibniz_module(&h, &[n2, z2], &[neg, z2]));
    out.push(("square_zero/symmetric".to_string(), a, b));
    let (a, b) = mk(leibniz_module(&h3, &[n2, n2, z2], &[z2, z2, z2]));
    out.push(("two_squares/left".to_string(), a, b));
    for f in ses_fixtures().into_iter().take(6) {
        let (sub, mid, quot) = (f.ses.sub(), f.ses.middle(), f.ses.quotient());
        let (sub, mid, quot) = (LeibnizModule::from_lie(sub), LeibnizModule::from_lie(mid), LeibnizModule::from_lie(quot));
        let alpha = LeibnizModuleMorphism::new(sub, mid.clone(), f.ses.alpha().map().clone()).unwrap();
        let beta = LeibnizModuleMorphism::new(mid, quot, f.ses.beta().map().clone()).unwrap();
        out.push((format!("lie:{}", f.name), alpha, beta));
    }
    out
}

pub fn leibniz_crossed_fixtures() -> Vec<LeibnizCrossedFixture> {
    let mut out = Vec::new();
    let canonical = |name: String, cm: LeibnizCrossedModule| {
        let pair = cm.induced_pair().expect("induced pair");
        LeibnizCrossedFixture { name, cm, pair }
    };
    for (name, h) in leibniz_bases().into_iter().filter(|(_, h)| h.dim() <= 4) {
        let h = Arc::new(h);
        out.push(canonical(format!("id:{name}"), LeibnizCrossedModule::identity(&h)));
        out.push(canonical(format!("zero:{name}/ad"), LeibnizCrossedModule::zero(&LeibnizModule::adjoint(&h))));
        out.push(canonical(format!("zero:{name}/k"), LeibnizCrossedModule::zero(&LeibnizModule::trivial(h.clone(), 1))));
    }
    for f in crossed_fixtures(false) {
        out.push(canonical(format!("lie:{}", f.name), LeibnizCrossedModule::from_lie(&f.cm)));
    }
    for (name, alpha, beta) in leibniz_ses_fixtures() {
        let quot = beta.target();
        for (k, c) in cohomology(quot, 2).basis.iter().enumerate() {
            let (cm, pair) = leibniz_yoneda_crossed_module(&alpha, &beta, c.representative()).expect("yoneda");
            out.push(LeibnizCrossedFixture { name: format!("yoneda:{name}#{k}"), cm, pair });
        }
    }
    out
}
