//! Brute-force reference computations. Nothing here calls the library's
//! elimination or coboundary code: ranks and solves use a separate dense
//! Gauss-Jordan over `BigRational`, coboundaries are evaluated straight from
//! the defining sums.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crossed_ext::algebra::{LeibnizModule, Representation, StructureConstants};
use crossed_ext::cohomology::tuples::combinations;
use crossed_ext::cohomology::{Cochain, Flavor, ShortExactSequence};
use crossed_ext::exactlin::{Field, Matrix, Scalar};

pub type Q = BigRational;

pub fn to_q(s: &Scalar) -> Q {
    match s {
        Scalar::Rational(r) => {
            let (n, d) = r.to_big_parts();
            BigRational::new(n, d)
        }
        Scalar::Modular(_) => panic!("oracles work over the rationals"),
    }
}

pub fn from_q(v: &Q) -> Scalar {
    Field::Rational.parse(&format!("{}/{}", v.numer(), v.denom())).unwrap()
}

pub fn q_vec(v: &[Scalar]) -> Vec<Q> {
    v.iter().map(to_q).collect()
}

pub fn q_matrix(m: &Matrix) -> Vec<Vec<Q>> {
    (0..m.rows()).map(|i| q_vec(m.row(i))).collect()
}

/// Reduced row echelon form in place; returns pivot columns.
fn gauss_jordan(rows: &mut [Vec<Q>], cols: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else { continue };
        rows.swap(r, p);
        let inv = rows[r][c].recip();
        for x in rows[r].iter_mut() {
            *x = &*x * &inv;
        }
        for i in 0..rows.len() {
            if i != r && !rows[i][c].is_zero() {
                let f = rows[i][c].clone();
                let pivot_row = rows[r].clone();
                for (x, y) in rows[i].iter_mut().zip(&pivot_row) {
                    *x = &*x - &f * y;
                }
            }
        }
        pivots.push(c);
        r += 1;
        if r == rows.len() {
            break;
        }
    }
    pivots
}

pub fn rank(rows: &[Vec<Q>], cols: usize) -> usize {
    let mut m = rows.to_vec();
    gauss_jordan(&mut m, cols).len()
}

/// A basis of `{x : a x = 0}`, where `a` is given by rows.
pub fn null_space(a: &[Vec<Q>], cols: usize) -> Vec<Vec<Q>> {
    let mut m = a.to_vec();
    let pivots = gauss_jordan(&mut m, cols);
    (0..cols)
        .filter(|c| !pivots.contains(c))
        .map(|free| {
            let mut x = vec![Q::zero(); cols];
            x[free] = Q::one();
            for (i, &p) in pivots.iter().enumerate() {
                x[p] = -m[i][free].clone();
            }
            x
        })
        .collect()
}

/// Some `x` with `a x = b`, where `a` is given by rows.
pub fn solve(a: &[Vec<Q>], cols: usize, b: &[Q]) -> Option<Vec<Q>> {
    let mut aug: Vec<Vec<Q>> = a.iter().zip(b).map(|(r, v)| r.iter().cloned().chain([v.clone()]).collect()).collect();
    let pivots = gauss_jordan(&mut aug, cols + 1);
    if pivots.last() == Some(&cols) {
        return None;
    }
    let mut x = vec![Q::zero(); cols];
    for (i, &p) in pivots.iter().enumerate() {
        x[p] = aug[i][cols].clone();
    }
    Some(x)
}

/// Whether `v` is a combination of the given columns.
pub fn in_span(columns: &[Vec<Q>], v: &[Q]) -> bool {
    let n = v.len();
    let rows: Vec<Vec<Q>> = (0..n).map(|i| columns.iter().map(|c| c[i].clone()).collect()).collect();
    solve(&rows, columns.len(), v).is_some()
}

fn bracket(sc: &StructureConstants, i: usize, j: usize) -> Vec<Q> {
    (0..sc.dim()).map(|k| to_q(sc.get(i, j, k))).collect()
}

fn act(m: &Matrix, v: &[Q]) -> Vec<Q> {
    (0..m.rows())
        .map(|r| (0..m.cols()).fold(Q::zero(), |acc, c| acc + to_q(m.get(r, c)) * &v[c]))
        .collect()
}

fn axpy(acc: &mut [Q], c: &Q, v: &[Q]) {
    for (a, b) in acc.iter_mut().zip(v) {
        *a = &*a + c * b;
    }
}

fn sign(odd: bool) -> Q {
    if odd {
        -Q::one()
    } else {
        Q::one()
    }
}

/// `f` on basis tuples as rationals; alternating cochains are read with
/// any argument order.
fn val(f: &Cochain, t: &[usize]) -> Vec<Q> {
    q_vec(&f.value(t))
}

/// `f(.., Σ c_k e_k at slot p, ..)`
fn val_with(f: &Cochain, t: &[usize], p: usize, coeffs: &[Q], m: usize) -> Vec<Q> {
    let mut out = vec![Q::zero(); m];
    let mut u = t.to_vec();
    for (k, c) in coeffs.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        u[p] = k;
        axpy(&mut out, c, &val(f, &u));
    }
    out
}

/// `(δf)(x_0..x_n) = Σ_i (−1)^i x_i f(..x̂_i..) + Σ_{i<j} (−1)^{i+j} f([x_i,x_j], ..x̂_i..x̂_j..)`
pub fn ce_coboundary_at(rep: &Representation, f: &Cochain, x: &[usize]) -> Vec<Q> {
    let m = rep.dim();
    let sc = rep.algebra().structure();
    let n = x.len();
    let mut out = vec![Q::zero(); m];
    for i in 0..n {
        let rest: Vec<usize> = x.iter().enumerate().filter(|&(a, _)| a != i).map(|(_, &v)| v).collect();
        let term = act(rep.action(x[i]), &val(f, &rest));
        axpy(&mut out, &sign(i % 2 == 1), &term);
    }
    for i in 0..n {
        for j in i + 1..n {
            let mut t = vec![0];
            t.extend(x.iter().enumerate().filter(|&(a, _)| a != i && a != j).map(|(_, &v)| v));
            let term = val_with(f, &t, 0, &bracket(sc, x[i], x[j]), m);
            axpy(&mut out, &sign((i + j) % 2 == 1), &term);
        }
    }
    out
}

/// `(δf)(x_1..x_{n+1}) = [x_1, f(x_2..)] + Σ_{i≥2} (−1)^i [f(..x̂_i..), x_i]
///   + Σ_{i<j} (−1)^{j+1} f(x_1..x_{i−1}, [x_i,x_j], x_{i+1}..x̂_j..)`, 1-based.
pub fn leibniz_coboundary_at(module: &LeibnizModule, f: &Cochain, x: &[usize]) -> Vec<Q> {
    let m = module.dim();
    let sc = module.algebra().structure();
    let n = x.len();
    let mut out = act(module.left(x[0]), &val(f, &x[1..]));
    for i in 2..=n {
        let rest: Vec<usize> = x.iter().enumerate().filter(|&(a, _)| a != i - 1).map(|(_, &v)| v).collect();
        let term = act(module.right(x[i - 1]), &val(f, &rest));
        axpy(&mut out, &sign(i % 2 == 1), &term);
    }
    for i in 1..=n {
        for j in i + 1..=n {
            let t: Vec<usize> = x.iter().enumerate().filter(|&(a, _)| a != j - 1).map(|(_, &v)| v).collect();
            let term = val_with(f, &t, i - 1, &bracket(sc, x[i - 1], x[j - 1]), m);
            axpy(&mut out, &sign((j + 1) % 2 == 1), &term);
        }
    }
    out
}

pub fn ce_coboundary(rep: &Representation, f: &Cochain) -> Cochain {
    let d = rep.algebra().dim();
    Cochain::from_fn(Flavor::ChevalleyEilenberg, Field::Rational, d, rep.dim(), f.degree() + 1, |t| {
        ce_coboundary_at(rep, f, t).iter().map(from_q).collect()
    })
}

pub fn leibniz_coboundary(module: &LeibnizModule, f: &Cochain) -> Cochain {
    let d = module.algebra().dim();
    Cochain::from_fn(Flavor::Leibniz, Field::Rational, d, module.dim(), f.degree() + 1, |t| {
        leibniz_coboundary_at(module, f, t).iter().map(from_q).collect()
    })
}

/// Columns of the CE coboundary `C^n → C^{n+1}`, built by evaluating the
/// defining sum on every basis cochain.
pub fn ce_coboundary_columns(rep: &Representation, n: usize) -> Vec<Vec<Q>> {
    let d = rep.algebra().dim();
    let m = rep.dim();
    let mut cols = Vec::new();
    for t in combinations(d, n) {
        for k in 0..m {
            let mut f = Cochain::zero(Flavor::ChevalleyEilenberg, Field::Rational, d, m, n);
            let mut v = vec![Field::Rational.zero(); m];
            v[k] = Field::Rational.one();
            f.set(&t, &v);
            let col: Vec<Q> = combinations(d, n + 1).iter().flat_map(|x| ce_coboundary_at(rep, &f, x)).collect();
            cols.push(col);
        }
    }
    cols
}

pub fn ce_cochain_dim(rep: &Representation, n: usize) -> usize {
    combinations(rep.algebra().dim(), n).len() * rep.dim()
}

/// `dim H^n` from ranks of the oracle coboundary matrices.
pub fn ce_cohomology_dim(rep: &Representation, n: usize) -> usize {
    let rank_of = |k: usize| -> usize {
        let cols = ce_coboundary_columns(rep, k);
        let rows = ce_cochain_dim(rep, k + 1);
        let mat: Vec<Vec<Q>> = (0..rows).map(|i| cols.iter().map(|c| c[i].clone()).collect()).collect();
        rank(&mat, cols.len())
    };
    let below = if n == 0 { 0 } else { rank_of(n - 1) };
    ce_cochain_dim(rep, n) - rank_of(n) - below
}

/// Whether `z` is a CE coboundary, by a rank test against the oracle matrix.
pub fn ce_is_coboundary(rep: &Representation, z: &Cochain) -> bool {
    let n = z.degree();
    if n == 0 {
        return z.is_zero();
    }
    in_span(&ce_coboundary_columns(rep, n - 1), &q_vec(z.coeffs()))
}

pub fn mat_vec(a: &[Vec<Q>], v: &[Q]) -> Vec<Q> {
    a.iter().map(|row| row.iter().zip(v).fold(Q::zero(), |acc, (x, y)| acc + x * y)).collect()
}

/// The snake-lemma connecting cochain: lift `c` to `M'` through a section
/// of `β`, apply the coboundary of `M'` and pull back along `α`.
pub fn connecting_cochain(ses: &ShortExactSequence, c: &Cochain) -> Cochain {
    let (sub, mid, quot) = (ses.sub(), ses.middle(), ses.quotient());
    let beta = q_matrix(ses.beta().map().matrix());
    let alpha = q_matrix(ses.alpha().map().matrix());
    let sections: Vec<Vec<Q>> = (0..quot.dim())
        .map(|k| {
            let mut e = vec![Q::zero(); quot.dim()];
            e[k] = Q::one();
            solve(&beta, mid.dim(), &e).expect("β is onto")
        })
        .collect();
    let d = mid.algebra().dim();
    let lifted = Cochain::from_fn(Flavor::ChevalleyEilenberg, Field::Rational, d, mid.dim(), c.degree(), |t| {
        let v = val(c, t);
        let mut out = vec![Q::zero(); mid.dim()];
        for (k, s) in sections.iter().enumerate() {
            axpy(&mut out, &v[k], s);
        }
        out.iter().map(from_q).collect()
    });
    Cochain::from_fn(Flavor::ChevalleyEilenberg, Field::Rational, d, sub.dim(), c.degree() + 1, |t| {
        let w = ce_coboundary_at(mid, &lifted, t);
        solve(&alpha, sub.dim(), &w).expect("the coboundary of a lift lands in α(M)").iter().map(from_q).collect()
    })
}

pub fn big(v: i64) -> Q {
    Q::from_integer(BigInt::from(v))
}
