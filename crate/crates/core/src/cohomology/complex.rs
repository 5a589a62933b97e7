use crate::algebra::{LeibnizModule, Representation};
use crate::exactlin::{Field, LinearMap, Scalar, SparseMatrix};

use super::tuples::{combinations, rank_combination, rank_full, tuple_count};
use super::{Cochain, Flavor};

/// Coefficient data of a cochain complex: an algebra together with a module.
pub trait Coefficients {
    fn flavor(&self) -> Flavor;
    fn field(&self) -> Field;
    fn algebra_dim(&self) -> usize;
    fn module_dim(&self) -> usize;
    /// `δ: C^n → C^{n+1}` on the canonical cochain basis.
    fn coboundary(&self, n: usize) -> SparseMatrix;

    fn cochain_dim(&self, n: usize) -> usize {
        tuple_count(self.flavor(), self.algebra_dim(), n) * self.module_dim()
    }

    fn zero_cochain(&self, n: usize) -> Cochain {
        Cochain::zero(self.flavor(), self.field(), self.algebra_dim(), self.module_dim(), n)
    }

    /// Checks that a cochain has the shape of this complex.
    fn accepts(&self, c: &Cochain) -> bool {
        c.flavor() == self.flavor()
            && c.field() == self.field()
            && c.algebra_dim() == self.algebra_dim()
            && c.module_dim() == self.module_dim()
    }
}

impl Coefficients for Representation {
    fn flavor(&self) -> Flavor {
        Flavor::ChevalleyEilenberg
    }

    fn field(&self) -> Field {
        Representation::field(self)
    }

    fn algebra_dim(&self) -> usize {
        self.algebra().dim()
    }

    fn module_dim(&self) -> usize {
        self.dim()
    }

    fn coboundary(&self, n: usize) -> SparseMatrix {
        ce_coboundary(self, n)
    }
}

impl Coefficients for LeibnizModule {
    fn flavor(&self) -> Flavor {
        Flavor::Leibniz
    }

    fn field(&self) -> Field {
        LeibnizModule::field(self)
    }

    fn algebra_dim(&self) -> usize {
        self.algebra().dim()
    }

    fn module_dim(&self) -> usize {
        self.dim()
    }

    fn coboundary(&self, n: usize) -> SparseMatrix {
        leibniz_coboundary(self, n)
    }
}

fn signed(odd: bool, v: &Scalar) -> Scalar {
    if odd {
        -v
    } else {
        v.clone()
    }
}

/// Coboundary of the alternating complex:
/// `(δf)(x_1..x_{n+1}) = Σ_i (−1)^{i+1} [x_i, f(..x̂_i..)]
///                      + Σ_{i<j} (−1)^{i+j} f([x_i,x_j], ..x̂_i..x̂_j..)`.
pub fn ce_coboundary(rep: &Representation, n: usize) -> SparseMatrix {
    let g = rep.algebra();
    let field = rep.field();
    let (d, m) = (g.dim(), rep.dim());
    let targets = combinations(d, n + 1);
    let mut out = SparseMatrix::zeros(field, targets.len() * m, tuple_count(Flavor::ChevalleyEilenberg, d, n) * m);
    let mut rest = Vec::with_capacity(n + 1);
    let mut ins = Vec::with_capacity(n + 1);
    for (ti, x) in targets.iter().enumerate() {
        let mut rows: Vec<Vec<(usize, Scalar)>> = vec![Vec::new(); m];
        for p in 0..=n {
            rest.clear();
            rest.extend(x.iter().enumerate().filter(|&(a, _)| a != p).map(|(_, &v)| v));
            let col = rank_combination(&rest, d) * m;
            let a = rep.action(x[p]);
            for (r, row) in rows.iter_mut().enumerate() {
                for s in 0..m {
                    let v = a.get(r, s);
                    if !v.is_zero() {
                        row.push((col + s, signed(p % 2 == 1, v)));
                    }
                }
            }
        }
        for p in 0..=n {
            for q in p + 1..=n {
                rest.clear();
                rest.extend(x.iter().enumerate().filter(|&(a, _)| a != p && a != q).map(|(_, &v)| v));
                let sign_odd = (p + q) % 2 == 1;
                for (k, c) in g.bracket_basis(x[p], x[q]).iter().enumerate() {
                    if c.is_zero() || rest.contains(&k) {
                        continue;
                    }
                    let pos = rest.iter().filter(|&&t| t < k).count();
                    ins.clear();
                    ins.extend_from_slice(&rest[..pos]);
                    ins.push(k);
                    ins.extend_from_slice(&rest[pos..]);
                    let col = rank_combination(&ins, d) * m;
                    let v = signed(sign_odd ^ (pos % 2 == 1), c);
                    for (r, row) in rows.iter_mut().enumerate() {
                        row.push((col + r, v.clone()));
                    }
                }
            }
        }
        for (r, row) in rows.into_iter().enumerate() {
            out.set_row(ti * m + r, row);
        }
    }
    out
}

/// Coboundary of the tensor complex:
/// `(δf)(x_1..x_{n+1}) = [x_1, f(x_2..)] + Σ_{i≥2} (−1)^i [f(..x̂_i..), x_i]
///                      + Σ_{i<j} (−1)^{j+1} f(x_1..x_{i−1}, [x_i,x_j], x_{i+1}..x̂_j..)`.
pub fn leibniz_coboundary(module: &LeibnizModule, n: usize) -> SparseMatrix {
    let h = module.algebra();
    let field = module.field();
    let (d, m) = (h.dim(), module.dim());
    let rows_count = tuple_count(Flavor::Leibniz, d, n + 1);
    let mut out = SparseMatrix::zeros(field, rows_count * m, tuple_count(Flavor::Leibniz, d, n) * m);
    let mut x = vec![0usize; n + 1];
    let mut rest = Vec::with_capacity(n + 1);
    for ti in 0..rows_count {
        let mut idx = ti;
        for p in (0..=n).rev() {
            x[p] = idx % d;
            idx /= d;
        }
        let mut rows: Vec<Vec<(usize, Scalar)>> = vec![Vec::new(); m];
        let push_action = |rows: &mut Vec<Vec<(usize, Scalar)>>, a: &crate::exactlin::Matrix, col: usize, odd: bool| {
            for (r, row) in rows.iter_mut().enumerate() {
                for s in 0..m {
                    let v = a.get(r, s);
                    if !v.is_zero() {
                        row.push((col + s, signed(odd, v)));
                    }
                }
            }
        };
        push_action(&mut rows, module.left(x[0]), rank_full(&x[1..], d) * m, false);
        for p in 1..=n {
            rest.clear();
            rest.extend(x.iter().enumerate().filter(|&(a, _)| a != p).map(|(_, &v)| v));
            push_action(&mut rows, module.right(x[p]), rank_full(&rest, d) * m, p % 2 == 0);
        }
        for p in 0..=n {
            for q in p + 1..=n {
                let odd = q % 2 == 1;
                for (k, c) in h.bracket_basis(x[p], x[q]).iter().enumerate() {
                    if c.is_zero() {
                        continue;
                    }
                    rest.clear();
                    rest.extend(
                        x.iter()
                            .enumerate()
                            .filter(|&(a, _)| a != q)
                            .map(|(a, &v)| if a == p { k } else { v }),
                    );
                    let col = rank_full(&rest, d) * m;
                    let v = signed(odd, c);
                    for (r, row) in rows.iter_mut().enumerate() {
                        row.push((col + r, v.clone()));
                    }
                }
            }
        }
        for (r, row) in rows.into_iter().enumerate() {
            out.set_row(ti * m + r, row);
        }
    }
    out
}

/// Dense matrix of the alternating coboundary in degree `n`.
pub fn ce_coboundary_matrix(rep: &Representation, n: usize) -> LinearMap {
    LinearMap::new(ce_coboundary(rep, n).to_dense())
}

/// Dense matrix of the tensor coboundary in degree `n`.
pub fn leibniz_coboundary_matrix(module: &LeibnizModule, n: usize) -> LinearMap {
    LinearMap::new(leibniz_coboundary(module, n).to_dense())
}

/// `δc`
pub fn apply_coboundary<C: Coefficients + ?Sized>(coeffs: &C, c: &Cochain) -> Cochain {
    assert!(coeffs.accepts(c), "cochain does not belong to this complex");
    let n = c.degree();
    let v = coeffs.coboundary(n).apply(c.coeffs());
    Cochain::from_vector(coeffs.flavor(), coeffs.field(), coeffs.algebra_dim(), coeffs.module_dim(), n + 1, v)
}
