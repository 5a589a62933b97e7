use super::matrix::{vector, Matrix};
use super::scalar::{Field, Scalar};
use super::subspace::Subspace;

/// A linear map `field^domain_dim -> field^codomain_dim`, stored as a
/// `codomain_dim x domain_dim` matrix acting on column vectors.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LinearMap {
    matrix: Matrix,
}

impl LinearMap {
    pub fn new(matrix: Matrix) -> Self {
        LinearMap { matrix }
    }

    pub fn zero(field: Field, domain_dim: usize, codomain_dim: usize) -> Self {
        LinearMap { matrix: Matrix::zeros(field, codomain_dim, domain_dim) }
    }

    pub fn identity(field: Field, dim: usize) -> Self {
        LinearMap { matrix: Matrix::identity(field, dim) }
    }

    /// The map sending the `i`-th standard basis vector to `images[i]`.
    pub fn from_images(field: Field, codomain_dim: usize, images: &[Vec<Scalar>]) -> Self {
        LinearMap { matrix: Matrix::from_columns(field, codomain_dim, images) }
    }

    pub fn domain_dim(&self) -> usize {
        self.matrix.cols()
    }

    pub fn codomain_dim(&self) -> usize {
        self.matrix.rows()
    }

    pub fn field(&self) -> Field {
        self.matrix.field()
    }

    pub fn matrix(&self) -> &Matrix {
        &self.matrix
    }

    pub fn into_matrix(self) -> Matrix {
        self.matrix
    }

    pub fn apply(&self, v: &[Scalar]) -> Vec<Scalar> {
        self.matrix.apply(v)
    }

    pub fn image_of_basis(&self, i: usize) -> Vec<Scalar> {
        self.matrix.column(i)
    }

    /// `self ∘ first`
    pub fn compose(&self, first: &LinearMap) -> LinearMap {
        LinearMap { matrix: self.matrix.mul(&first.matrix) }
    }

    pub fn add(&self, other: &LinearMap) -> LinearMap {
        LinearMap { matrix: self.matrix.add(&other.matrix) }
    }

    pub fn sub(&self, other: &LinearMap) -> LinearMap {
        LinearMap { matrix: self.matrix.sub(&other.matrix) }
    }

    pub fn scale(&self, c: &Scalar) -> LinearMap {
        LinearMap { matrix: self.matrix.scale(c) }
    }

    pub fn neg(&self) -> LinearMap {
        self.scale(&-self.field().one())
    }

    pub fn is_zero(&self) -> bool {
        self.matrix.is_zero()
    }

    pub fn rank(&self) -> usize {
        self.matrix.rank()
    }

    pub fn is_injective(&self) -> bool {
        self.rank() == self.domain_dim()
    }

    pub fn is_surjective(&self) -> bool {
        self.rank() == self.codomain_dim()
    }

    /// `x ↦ (self(x), other(x))`
    pub fn stack(&self, other: &LinearMap) -> LinearMap {
        LinearMap { matrix: self.matrix.vstack(&other.matrix) }
    }

    /// `(x, y) ↦ self(x) + other(y)`
    pub fn juxtapose(&self, other: &LinearMap) -> LinearMap {
        LinearMap { matrix: self.matrix.hstack(&other.matrix) }
    }

    pub fn direct_sum(&self, other: &LinearMap) -> LinearMap {
        LinearMap { matrix: self.matrix.block_diag(&other.matrix) }
    }
}

/// `{ v : f(v) = 0 }`
pub fn kernel(f: &LinearMap) -> Subspace {
    let field = f.field();
    let n = f.domain_dim();
    let r = f.matrix().rref();
    let mut is_pivot = vec![false; n];
    for &p in &r.pivots {
        is_pivot[p] = true;
    }
    // One kernel vector per free column: set it to 1 and solve for the pivots.
    let vectors: Vec<Vec<Scalar>> = (0..n)
        .filter(|&c| !is_pivot[c])
        .map(|free| {
            let mut v = vector::unit(field, n, free);
            for (row, &p) in r.pivots.iter().enumerate() {
                v[p] = -r.matrix.get(row, free).clone();
            }
            v
        })
        .collect();
    Subspace::span(field, n, &vectors)
}

/// Column span of `f`.
pub fn image(f: &LinearMap) -> Subspace {
    Subspace::row_span(&f.matrix().transpose())
}

/// Canonical quotient `field^ambient_dim / sub`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Quotient {
    pub projection: LinearMap,
    pub section: LinearMap,
    pub dim: usize,
}

/// The quotient basis is the set of non-pivot coordinates of `sub`'s RREF;
/// the projection sends `v` to those coordinates of `sub.reduce(v)`.
pub fn quotient(ambient_dim: usize, sub: &Subspace) -> Quotient {
    assert_eq!(sub.ambient_dim(), ambient_dim, "subspace lives in a different space");
    let field = sub.field();
    let mut is_pivot = vec![false; ambient_dim];
    for &p in sub.pivots() {
        is_pivot[p] = true;
    }
    let free: Vec<usize> = (0..ambient_dim).filter(|&c| !is_pivot[c]).collect();
    let dim = free.len();
    let mut projection = Matrix::zeros(field, dim, ambient_dim);
    for j in 0..ambient_dim {
        let reduced = sub.reduce(&vector::unit(field, ambient_dim, j));
        for (k, &c) in free.iter().enumerate() {
            projection.set(k, j, reduced[c].clone());
        }
    }
    let mut section = Matrix::zeros(field, ambient_dim, dim);
    for (k, &c) in free.iter().enumerate() {
        section.set(c, k, field.one());
    }
    Quotient { projection: LinearMap::new(projection), section: LinearMap::new(section), dim }
}

/// Some `v` with `f(v) = target`, or `None` when `target ∉ image(f)`.
pub fn solve(f: &LinearMap, target: &[Scalar]) -> Option<Vec<Scalar>> {
    assert_eq!(target.len(), f.codomain_dim(), "target length mismatch");
    let field = f.field();
    let n = f.domain_dim();
    let col = Matrix::from_columns(field, target.len(), &[target.to_vec()]);
    let aug = f.matrix().hstack(&col).rref();
    if aug.pivots.last() == Some(&n) {
        return None;
    }
    let mut v = vector::zeros(field, n);
    for (row, &p) in aug.pivots.iter().enumerate() {
        v[p] = aug.matrix.get(row, n).clone();
    }
    Some(v)
}

/// A generalized inverse `q` of `f` with `f ∘ q ∘ f = f`, so `f ∘ q` is the
/// identity on `image(f)`. It is built from the first independent columns `C`
/// and first independent rows `R` of `f`: `q[C,R] = f[R,C]^{-1}`, zero
/// elsewhere. If `f` is injective then also `q ∘ f = id`.
pub fn linear_section(f: &LinearMap) -> LinearMap {
    let field = f.field();
    let m = f.matrix();
    let cols = m.rref().pivots;
    let rows = m.transpose().rref().pivots;
    debug_assert_eq!(cols.len(), rows.len());
    let r = cols.len();
    let mut sub = Matrix::zeros(field, r, r);
    for (a, &i) in rows.iter().enumerate() {
        for (b, &j) in cols.iter().enumerate() {
            sub.set(a, b, m.get(i, j).clone());
        }
    }
    let inv = sub.inverse().expect("rank-sized minor on independent rows and columns is invertible");
    let mut q = Matrix::zeros(field, f.domain_dim(), f.codomain_dim());
    for (b, &j) in cols.iter().enumerate() {
        for (a, &i) in rows.iter().enumerate() {
            q.set(j, i, inv.get(b, a).clone());
        }
    }
    LinearMap::new(q)
}
