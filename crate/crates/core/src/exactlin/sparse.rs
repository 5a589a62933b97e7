use std::collections::BTreeMap;

use super::matrix::Matrix;
use super::scalar::{Field, Scalar};

/// Row-compressed sparse matrix. Used for coboundary operators, whose dense
/// form grows too quickly for tensor-power cochains.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SparseMatrix {
    rows: usize,
    cols: usize,
    field: Field,
    /// Per row, `(column, value)` pairs sorted by column with no zero values.
    entries: Vec<Vec<(usize, Scalar)>>,
}

impl SparseMatrix {
    pub fn zeros(field: Field, rows: usize, cols: usize) -> Self {
        SparseMatrix { rows, cols, field, entries: vec![Vec::new(); rows] }
    }

    /// Builds row `r` from unsorted contributions, merging duplicates.
    pub fn set_row(&mut self, r: usize, contributions: impl IntoIterator<Item = (usize, Scalar)>) {
        let mut acc: BTreeMap<usize, Scalar> = BTreeMap::new();
        for (c, v) in contributions {
            debug_assert!(c < self.cols);
            if v.is_zero() {
                continue;
            }
            acc.entry(c).and_modify(|a| *a += &v).or_insert(v);
        }
        self.entries[r] = acc.into_iter().filter(|(_, v)| !v.is_zero()).collect();
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn row(&self, r: usize) -> &[(usize, Scalar)] {
        &self.entries[r]
    }

    pub fn nnz(&self) -> usize {
        self.entries.iter().map(Vec::len).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Vec::is_empty)
    }

    pub fn to_dense(&self) -> Matrix {
        let mut m = Matrix::zeros(self.field, self.rows, self.cols);
        for (r, row) in self.entries.iter().enumerate() {
            for (c, v) in row {
                m.set(r, *c, v.clone());
            }
        }
        m
    }

    pub fn apply(&self, v: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(v.len(), self.cols);
        self.entries
            .iter()
            .map(|row| {
                let mut acc = self.field.zero();
                for (c, a) in row {
                    acc.add_product(a, &v[*c]);
                }
                acc
            })
            .collect()
    }

    /// `self * rhs`
    pub fn mul(&self, rhs: &SparseMatrix) -> SparseMatrix {
        assert_eq!(self.cols, rhs.rows, "shape mismatch in sparse product");
        let mut out = SparseMatrix::zeros(self.field, self.rows, rhs.cols);
        for (r, row) in self.entries.iter().enumerate() {
            let mut acc: BTreeMap<usize, Scalar> = BTreeMap::new();
            for (k, a) in row {
                for (c, b) in &rhs.entries[*k] {
                    acc.entry(*c).or_insert_with(|| self.field.zero()).add_product(a, b);
                }
            }
            out.entries[r] = acc.into_iter().filter(|(_, v)| !v.is_zero()).collect();
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn matches_dense_product() {
        let q = Field::Rational;
        let mut a = SparseMatrix::zeros(q, 2, 3);
        a.set_row(0, [(0, q.one()), (2, q.from_i64(2)), (0, q.one())]);
        a.set_row(1, [(1, q.from_i64(-1))]);
        let mut b = SparseMatrix::zeros(q, 3, 2);
        b.set_row(0, [(1, q.one())]);
        b.set_row(2, [(0, q.from_i64(3)), (1, q.from_i64(-1))]);
        assert_eq!(a.mul(&b).to_dense(), a.to_dense().mul(&b.to_dense()));
        assert_eq!(a.row(0)[0], (0, q.from_i64(2)));
        let v = vec![q.one(), q.from_i64(2), q.from_i64(3)];
        assert_eq!(a.apply(&v), a.to_dense().apply(&v));
    }
}
