use std::ops::Deref;

use crate::exactlin::{image, solve, vector, Field, LinearMap, Matrix, Scalar, Subspace};

use super::AlgebraError;

/// Bilinear bracket on `field^dim` given by constants `c[i][j][k]` with
/// `[e_i, e_j] = Σ_k c[i][j][k] e_k`. All `dim²` brackets are stored; no
/// symmetry is implied by the storage.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct StructureConstants {
    dim: usize,
    field: Field,
    c: Vec<Scalar>,
}

impl StructureConstants {
    pub fn zero(field: Field, dim: usize) -> Self {
        StructureConstants { dim, field, c: vec![field.zero(); dim * dim * dim] }
    }

    /// Sets `c[i][j][k]` from `(i, j, k, value)` records; omitted entries are zero.
    /// Repeated records for the same index are summed.
    pub fn from_entries(
        field: Field,
        dim: usize,
        entries: impl IntoIterator<Item = (usize, usize, usize, Scalar)>,
    ) -> Result<Self, AlgebraError> {
        let mut sc = Self::zero(field, dim);
        for (i, j, k, v) in entries {
            if i >= dim || j >= dim || k >= dim {
                return Err(AlgebraError::Shape(format!(
                    "structure constant index ({i}, {j}, {k}) out of range for dimension {dim}"
                )));
            }
            if v.field() != field {
                return Err(AlgebraError::FieldMismatch);
            }
            let idx = sc.index(i, j, k);
            sc.c[idx] += &v;
        }
        Ok(sc)
    }

    /// Convenience for integer tables: each `(i, j, k, v)` sets `c[i][j][k] = v`.
    pub fn from_i64(field: Field, dim: usize, entries: &[(usize, usize, usize, i64)]) -> Self {
        Self::from_entries(field, dim, entries.iter().map(|&(i, j, k, v)| (i, j, k, field.from_i64(v))))
            .expect("valid structure constant table")
    }

    /// Antisymmetric convenience: each `(i, j, k, v)` sets `c[i][j][k] = v`
    /// and `c[j][i][k] = -v`.
    pub fn antisymmetric_from_i64(field: Field, dim: usize, entries: &[(usize, usize, usize, i64)]) -> Self {
        let both = entries.iter().flat_map(|&(i, j, k, v)| {
            [(i, j, k, field.from_i64(v)), (j, i, k, field.from_i64(-v))]
        });
        Self::from_entries(field, dim, both).expect("valid structure constant table")
    }

    fn index(&self, i: usize, j: usize, k: usize) -> usize {
        (i * self.dim + j) * self.dim + k
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn get(&self, i: usize, j: usize, k: usize) -> &Scalar {
        &self.c[self.index(i, j, k)]
    }

    /// `[e_i, e_j]` as a coordinate slice.
    pub fn bracket_basis(&self, i: usize, j: usize) -> &[Scalar] {
        let start = self.index(i, j, 0);
        &self.c[start..start + self.dim]
    }

    /// Nonzero `(i, j, k, c[i][j][k])` records in lexicographic order.
    pub fn entries(&self) -> impl Iterator<Item = (usize, usize, usize, &Scalar)> + '_ {
        let d = self.dim;
        (0..d)
            .flat_map(move |i| (0..d).flat_map(move |j| (0..d).map(move |k| (i, j, k))))
            .map(|(i, j, k)| (i, j, k, self.get(i, j, k)))
            .filter(|(_, _, _, v)| !v.is_zero())
    }

    pub fn bracket(&self, x: &[Scalar], y: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(x.len(), self.dim);
        assert_eq!(y.len(), self.dim);
        let mut out = vector::zeros(self.field, self.dim);
        for (i, xi) in x.iter().enumerate().filter(|(_, v)| !v.is_zero()) {
            for (j, yj) in y.iter().enumerate().filter(|(_, v)| !v.is_zero()) {
                let coeff = xi * yj;
                vector::axpy(&mut out, &coeff, self.bracket_basis(i, j));
            }
        }
        out
    }

    /// Matrix of `[e_i, -]`.
    pub fn left_mult(&self, i: usize) -> Matrix {
        let cols: Vec<Vec<Scalar>> = (0..self.dim).map(|j| self.bracket_basis(i, j).to_vec()).collect();
        Matrix::from_columns(self.field, self.dim, &cols)
    }

    /// Matrix of `[-, e_i]`.
    pub fn right_mult(&self, i: usize) -> Matrix {
        let cols: Vec<Vec<Scalar>> = (0..self.dim).map(|j| self.bracket_basis(j, i).to_vec()).collect();
        Matrix::from_columns(self.field, self.dim, &cols)
    }

    fn nested(&self, x: &[Scalar], y: &[Scalar], z: &[Scalar]) -> (Vec<Scalar>, Vec<Scalar>, Vec<Scalar>) {
        // ([x,[y,z]], [[x,y],z], [[x,z],y])
        (
            self.bracket(x, &self.bracket(y, z)),
            self.bracket(&self.bracket(x, y), z),
            self.bracket(&self.bracket(x, z), y),
        )
    }

    /// Structure constants in the basis given by the columns of `p`.
    pub fn change_basis(&self, p: &Matrix) -> Result<Self, AlgebraError> {
        let inv = p
            .inverse()
            .ok_or_else(|| AlgebraError::Shape("basis change matrix is singular".into()))?;
        let cols: Vec<Vec<Scalar>> = (0..self.dim).map(|a| p.column(a)).collect();
        let mut out = Self::zero(self.field, self.dim);
        for a in 0..self.dim {
            for b in 0..self.dim {
                let coords = inv.apply(&self.bracket(&cols[a], &cols[b]));
                for (k, v) in coords.into_iter().enumerate() {
                    let idx = out.index(a, b, k);
                    out.c[idx] = v;
                }
            }
        }
        Ok(out)
    }

    /// Bracket restricted to the span of the columns of `basis`, which must be
    /// closed under the bracket. Coordinates are taken in that basis.
    pub fn restrict(&self, basis: &Matrix) -> Result<Self, AlgebraError> {
        let n = basis.cols();
        let inc = LinearMap::new(basis.clone());
        let cols: Vec<Vec<Scalar>> = (0..n).map(|a| basis.column(a)).collect();
        let mut out = Self::zero(self.field, n);
        for a in 0..n {
            for b in 0..n {
                let v = self.bracket(&cols[a], &cols[b]);
                let coords = solve(&inc, &v)
                    .ok_or_else(|| AlgebraError::Shape("subspace is not closed under the bracket".into()))?;
                for (k, x) in coords.into_iter().enumerate() {
                    let idx = out.index(a, b, k);
                    out.c[idx] = x;
                }
            }
        }
        Ok(out)
    }

    /// Componentwise bracket on `self ⊕ other`.
    pub fn direct_sum(&self, other: &Self) -> Self {
        assert_eq!(self.field, other.field);
        let (n, m) = (self.dim, other.dim);
        let mut out = Self::zero(self.field, n + m);
        for (i, j, k, v) in self.entries() {
            let idx = out.index(i, j, k);
            out.c[idx] = v.clone();
        }
        for (i, j, k, v) in other.entries() {
            let idx = out.index(n + i, n + j, n + k);
            out.c[idx] = v.clone();
        }
        out
    }

    /// Whether `sub` is a two-sided ideal.
    pub fn is_ideal(&self, sub: &Subspace) -> bool {
        let basis = sub.basis_vectors();
        (0..self.dim).all(|i| {
            let e = vector::unit(self.field, self.dim, i);
            basis
                .iter()
                .all(|v| sub.contains(&self.bracket(&e, v)) && sub.contains(&self.bracket(v, &e)))
        })
    }

    /// Induced bracket on `self / ideal` in the canonical quotient basis.
    pub fn quotient(&self, ideal: &Subspace) -> Result<(Self, crate::exactlin::Quotient), AlgebraError> {
        if !self.is_ideal(ideal) {
            return Err(AlgebraError::NotAnIdeal);
        }
        let q = crate::exactlin::quotient(self.dim, ideal);
        let lifts: Vec<Vec<Scalar>> = (0..q.dim).map(|a| q.section.image_of_basis(a)).collect();
        let mut out = Self::zero(self.field, q.dim);
        for a in 0..q.dim {
            for b in 0..q.dim {
                let v = q.projection.apply(&self.bracket(&lifts[a], &lifts[b]));
                for (k, x) in v.into_iter().enumerate() {
                    let idx = out.index(a, b, k);
                    out.c[idx] = x;
                }
            }
        }
        Ok((out, q))
    }

    /// Checks `f[x, y] = [f x, f y]` on basis pairs.
    pub fn check_homomorphism(&self, f: &LinearMap, target: &StructureConstants) -> Result<(), AlgebraError> {
        if f.domain_dim() != self.dim || f.codomain_dim() != target.dim {
            return Err(AlgebraError::Shape("homomorphism has the wrong shape".into()));
        }
        let imgs: Vec<Vec<Scalar>> = (0..self.dim).map(|i| f.image_of_basis(i)).collect();
        for i in 0..self.dim {
            for j in 0..self.dim {
                let lhs = f.apply(self.bracket_basis(i, j));
                let rhs = target.bracket(&imgs[i], &imgs[j]);
                if lhs != rhs {
                    return Err(AlgebraError::NotAHomomorphism { i, j });
                }
            }
        }
        Ok(())
    }

    /// Subspace spanned by all brackets.
    pub fn derived(&self) -> Subspace {
        let cols: Vec<Vec<Scalar>> = (0..self.dim)
            .flat_map(|i| (0..self.dim).map(move |j| (i, j)))
            .map(|(i, j)| self.bracket_basis(i, j).to_vec())
            .collect();
        image(&LinearMap::from_images(self.field, self.dim, &cols))
    }
}

/// A Lie algebra: antisymmetric structure constants satisfying Jacobi.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LieAlgebra(StructureConstants);

/// A right Leibniz algebra: `[x,[y,z]] = [[x,y],z] - [[x,z],y]`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LeibnizAlgebra(StructureConstants);

/// Checks antisymmetry then Jacobi; reports the first failing basis witness.
pub fn validate_lie(sc: StructureConstants) -> Result<LieAlgebra, AlgebraError> {
    let d = sc.dim;
    for i in 0..d {
        for j in i..d {
            for k in 0..d {
                let a = sc.get(i, j, k);
                let b = sc.get(j, i, k);
                if !(a + b).is_zero() {
                    return Err(AlgebraError::AntisymFail { i, j });
                }
            }
        }
    }
    for i in 0..d {
        for j in 0..d {
            for k in 0..d {
                let (x, y, z) = basis3(sc.field, d, i, j, k);
                // [x,[y,z]] + [y,[z,x]] + [z,[x,y]]
                let mut s = sc.bracket(&x, &sc.bracket(&y, &z));
                s = vector::add(&s, &sc.bracket(&y, &sc.bracket(&z, &x)));
                s = vector::add(&s, &sc.bracket(&z, &sc.bracket(&x, &y)));
                if !vector::is_zero(&s) {
                    return Err(AlgebraError::JacobiFail { i, j, k });
                }
            }
        }
    }
    Ok(LieAlgebra(sc))
}

/// Checks the right Leibniz identity on all basis triples.
pub fn validate_leibniz(sc: StructureConstants) -> Result<LeibnizAlgebra, AlgebraError> {
    let d = sc.dim;
    for i in 0..d {
        for j in 0..d {
            for k in 0..d {
                let (x, y, z) = basis3(sc.field, d, i, j, k);
                let (lhs, a, b) = sc.nested(&x, &y, &z);
                if lhs != vector::sub(&a, &b) {
                    return Err(AlgebraError::LeibnizFail { i, j, k });
                }
            }
        }
    }
    Ok(LeibnizAlgebra(sc))
}

fn basis3(field: Field, d: usize, i: usize, j: usize, k: usize) -> (Vec<Scalar>, Vec<Scalar>, Vec<Scalar>) {
    (vector::unit(field, d, i), vector::unit(field, d, j), vector::unit(field, d, k))
}

impl LieAlgebra {
    pub fn new(sc: StructureConstants) -> Result<Self, AlgebraError> {
        validate_lie(sc)
    }

    pub fn abelian(field: Field, dim: usize) -> Self {
        LieAlgebra(StructureConstants::zero(field, dim))
    }

    pub fn structure(&self) -> &StructureConstants {
        &self.0
    }

    pub fn into_structure(self) -> StructureConstants {
        self.0
    }

    /// Every Lie algebra is a (right) Leibniz algebra.
    pub fn to_leibniz(&self) -> LeibnizAlgebra {
        LeibnizAlgebra(self.0.clone())
    }

    pub fn change_basis(&self, p: &Matrix) -> Result<Self, AlgebraError> {
        Ok(LieAlgebra(self.0.change_basis(p)?))
    }

    pub fn direct_sum(&self, other: &LieAlgebra) -> LieAlgebra {
        LieAlgebra(self.0.direct_sum(&other.0))
    }

    pub fn subalgebra(&self, basis: &Matrix) -> Result<LieAlgebra, AlgebraError> {
        Ok(LieAlgebra(self.0.restrict(basis)?))
    }

    pub fn quotient(&self, ideal: &Subspace) -> Result<(LieAlgebra, crate::exactlin::Quotient), AlgebraError> {
        let (sc, q) = self.0.quotient(ideal)?;
        Ok((LieAlgebra(sc), q))
    }

    pub fn check_homomorphism(&self, f: &LinearMap, target: &LieAlgebra) -> Result<(), AlgebraError> {
        self.0.check_homomorphism(f, &target.0)
    }
}

impl Deref for LieAlgebra {
    type Target = StructureConstants;
    fn deref(&self) -> &StructureConstants {
        &self.0
    }
}

impl LeibnizAlgebra {
    pub fn new(sc: StructureConstants) -> Result<Self, AlgebraError> {
        validate_leibniz(sc)
    }

    pub fn structure(&self) -> &StructureConstants {
        &self.0
    }

    pub fn change_basis(&self, p: &Matrix) -> Result<Self, AlgebraError> {
        Ok(LeibnizAlgebra(self.0.change_basis(p)?))
    }

    pub fn direct_sum(&self, other: &LeibnizAlgebra) -> LeibnizAlgebra {
        LeibnizAlgebra(self.0.direct_sum(&other.0))
    }

    pub fn quotient(&self, ideal: &Subspace) -> Result<(LeibnizAlgebra, crate::exactlin::Quotient), AlgebraError> {
        let (sc, q) = self.0.quotient(ideal)?;
        Ok((LeibnizAlgebra(sc), q))
    }

    pub fn check_homomorphism(&self, f: &LinearMap, target: &LeibnizAlgebra) -> Result<(), AlgebraError> {
        self.0.check_homomorphism(f, &target.0)
    }
}

impl Deref for LeibnizAlgebra {
    type Target = StructureConstants;
    fn deref(&self) -> &StructureConstants {
        &self.0
    }
}
