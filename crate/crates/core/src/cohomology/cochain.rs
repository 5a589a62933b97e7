use crate::exactlin::{vector, Field, LinearMap, Scalar};

use super::tuples::{rank_combination, rank_full, sort_with_sign, tuple_count, tuples};
use super::Flavor;

/// A degree-`n` cochain with values in a `module_dim`-dimensional module.
/// Coordinate `t * module_dim + r` holds component `r` of the value on the
/// `t`-th index tuple.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Cochain {
    flavor: Flavor,
    degree: usize,
    algebra_dim: usize,
    module_dim: usize,
    field: Field,
    coeffs: Vec<Scalar>,
}

impl Cochain {
    pub fn zero(flavor: Flavor, field: Field, algebra_dim: usize, module_dim: usize, degree: usize) -> Self {
        let len = tuple_count(flavor, algebra_dim, degree) * module_dim;
        Cochain { flavor, degree, algebra_dim, module_dim, field, coeffs: vector::zeros(field, len) }
    }

    pub fn from_vector(
        flavor: Flavor,
        field: Field,
        algebra_dim: usize,
        module_dim: usize,
        degree: usize,
        coeffs: Vec<Scalar>,
    ) -> Self {
        assert_eq!(coeffs.len(), tuple_count(flavor, algebra_dim, degree) * module_dim, "cochain length");
        Cochain { flavor, degree, algebra_dim, module_dim, field, coeffs }
    }

    /// Evaluates `f` on every index tuple (increasing tuples for the
    /// alternating flavor).
    pub fn from_fn(
        flavor: Flavor,
        field: Field,
        algebra_dim: usize,
        module_dim: usize,
        degree: usize,
        mut f: impl FnMut(&[usize]) -> Vec<Scalar>,
    ) -> Self {
        let mut coeffs = Vec::with_capacity(tuple_count(flavor, algebra_dim, degree) * module_dim);
        for t in tuples(flavor, algebra_dim, degree) {
            let v = f(&t);
            assert_eq!(v.len(), module_dim, "cochain value has the wrong length");
            coeffs.extend(v);
        }
        Cochain { flavor, degree, algebra_dim, module_dim, field, coeffs }
    }

    pub fn flavor(&self) -> Flavor {
        self.flavor
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn algebra_dim(&self) -> usize {
        self.algebra_dim
    }

    pub fn module_dim(&self) -> usize {
        self.module_dim
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn coeffs(&self) -> &[Scalar] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<Scalar> {
        self.coeffs
    }

    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn index_tuples(&self) -> Vec<Vec<usize>> {
        tuples(self.flavor, self.algebra_dim, self.degree)
    }

    fn slot(&self, t: &[usize]) -> usize {
        match self.flavor {
            Flavor::ChevalleyEilenberg => rank_combination(t, self.algebra_dim),
            Flavor::Leibniz => rank_full(t, self.algebra_dim),
        }
    }

    fn check_tuple(&self, t: &[usize]) {
        assert_eq!(t.len(), self.degree, "tuple length differs from the degree");
        assert!(t.iter().all(|&i| i < self.algebra_dim), "tuple index out of range");
    }

    /// Value on basis vectors `e_{t_0}, …, e_{t_{n−1}}`. Alternating cochains
    /// accept any order and repeated indices.
    pub fn value(&self, t: &[usize]) -> Vec<Scalar> {
        self.check_tuple(t);
        let m = self.module_dim;
        match self.flavor {
            Flavor::Leibniz => {
                let s = self.slot(t) * m;
                self.coeffs[s..s + m].to_vec()
            }
            Flavor::ChevalleyEilenberg => match sort_with_sign(t) {
                None => vector::zeros(self.field, m),
                Some((sorted, odd)) => {
                    let s = self.slot(&sorted) * m;
                    let v = &self.coeffs[s..s + m];
                    if odd {
                        v.iter().map(|x| -x).collect()
                    } else {
                        v.to_vec()
                    }
                }
            },
        }
    }

    /// Value on arbitrary algebra elements, by multilinearity.
    pub fn evaluate(&self, args: &[Vec<Scalar>]) -> Vec<Scalar> {
        assert_eq!(args.len(), self.degree);
        let mut out = vector::zeros(self.field, self.module_dim);
        let mut idx = vec![0usize; self.degree];
        self.evaluate_rec(args, 0, &self.field.one(), &mut idx, &mut out);
        out
    }

    fn evaluate_rec(&self, args: &[Vec<Scalar>], p: usize, coeff: &Scalar, idx: &mut Vec<usize>, out: &mut [Scalar]) {
        if p == args.len() {
            vector::axpy(out, coeff, &self.value(idx));
            return;
        }
        for (i, a) in args[p].iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            idx[p] = i;
            self.evaluate_rec(args, p + 1, &(coeff * a), idx, out);
        }
    }

    /// Sets the value on an index tuple (increasing for the alternating flavor).
    pub fn set(&mut self, t: &[usize], value: &[Scalar]) {
        self.check_tuple(t);
        if self.flavor == Flavor::ChevalleyEilenberg {
            assert!(t.windows(2).all(|w| w[0] < w[1]), "alternating cochains are set on increasing tuples");
        }
        assert_eq!(value.len(), self.module_dim);
        let m = self.module_dim;
        let s = self.slot(t) * m;
        self.coeffs[s..s + m].clone_from_slice(value);
    }

    /// Nonzero `(tuple, value)` records in index order.
    pub fn entries(&self) -> Vec<(Vec<usize>, Vec<Scalar>)> {
        let m = self.module_dim;
        self.index_tuples()
            .into_iter()
            .enumerate()
            .map(|(i, t)| (t, self.coeffs[i * m..(i + 1) * m].to_vec()))
            .filter(|(_, v)| !vector::is_zero(v))
            .collect()
    }

    pub fn is_zero(&self) -> bool {
        vector::is_zero(&self.coeffs)
    }

    fn same_shape(&self, other: &Cochain) {
        assert_eq!(
            (self.flavor, self.degree, self.algebra_dim, self.module_dim),
            (other.flavor, other.degree, other.algebra_dim, other.module_dim),
            "cochains of different shapes"
        );
    }

    fn with_coeffs(&self, coeffs: Vec<Scalar>) -> Cochain {
        Cochain { coeffs, ..self.clone_shape() }
    }

    fn clone_shape(&self) -> Cochain {
        Cochain {
            flavor: self.flavor,
            degree: self.degree,
            algebra_dim: self.algebra_dim,
            module_dim: self.module_dim,
            field: self.field,
            coeffs: Vec::new(),
        }
    }

    pub fn add(&self, other: &Cochain) -> Cochain {
        self.same_shape(other);
        self.with_coeffs(vector::add(&self.coeffs, &other.coeffs))
    }

    pub fn sub(&self, other: &Cochain) -> Cochain {
        self.same_shape(other);
        self.with_coeffs(vector::sub(&self.coeffs, &other.coeffs))
    }

    pub fn scale(&self, c: &Scalar) -> Cochain {
        self.with_coeffs(vector::scale(&self.coeffs, c))
    }

    pub fn neg(&self) -> Cochain {
        self.scale(&-self.field.one())
    }

    /// Post-composes every value with `f`.
    pub fn map_values(&self, f: &LinearMap) -> Cochain {
        assert_eq!(f.domain_dim(), self.module_dim);
        let m = self.module_dim;
        let count = tuple_count(self.flavor, self.algebra_dim, self.degree);
        let mut coeffs = Vec::with_capacity(count * f.codomain_dim());
        for t in 0..count {
            coeffs.extend(f.apply(&self.coeffs[t * m..(t + 1) * m]));
        }
        Cochain { module_dim: f.codomain_dim(), coeffs, ..self.clone_shape() }
    }

    /// Precomposes with a linear map `h: K^k → K^d` between algebras, giving
    /// a cochain on the `k`-dimensional algebra.
    pub fn pull_back_arguments(&self, h: &LinearMap) -> Cochain {
        assert_eq!(h.codomain_dim(), self.algebra_dim);
        let images: Vec<Vec<Scalar>> = (0..h.domain_dim()).map(|i| h.image_of_basis(i)).collect();
        Cochain::from_fn(self.flavor, self.field, h.domain_dim(), self.module_dim, self.degree, |t| {
            let args: Vec<Vec<Scalar>> = t.iter().map(|&i| images[i].clone()).collect();
            self.evaluate(&args)
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn alternating_values() {
        let q = Field::Rational;
        let mut c = Cochain::zero(Flavor::ChevalleyEilenberg, q, 3, 1, 2);
        c.set(&[0, 2], &[q.from_i64(5)]);
        assert_eq!(c.value(&[2, 0]), vec![q.from_i64(-5)]);
        assert_eq!(c.value(&[1, 1]), vec![q.zero()]);
        assert_eq!(c.entries(), vec![(vec![0, 2], vec![q.from_i64(5)])]);
        let x = vec![q.one(), q.zero(), q.zero()];
        let z = vec![q.zero(), q.one(), q.from_i64(2)];
        assert_eq!(c.evaluate(&[x, z]), vec![q.from_i64(10)]);
    }

    #[test]
    fn tensor_values() {
        let q = Field::Rational;
        let mut c = Cochain::zero(Flavor::Leibniz, q, 2, 2, 2);
        assert_eq!(c.len(), 8);
        c.set(&[1, 0], &[q.one(), q.from_i64(3)]);
        assert_eq!(c.value(&[1, 0]), vec![q.one(), q.from_i64(3)]);
        assert!(vector::is_zero(&c.value(&[0, 1])));
    }

    #[test]
    fn map_values_composes() {
        let q = Field::Rational;
        let mut c = Cochain::zero(Flavor::ChevalleyEilenberg, q, 2, 1, 1);
        c.set(&[1], &[q.from_i64(2)]);
        let f = LinearMap::from_images(q, 2, &[vec![q.one(), q.from_i64(-1)]]);
        let d = c.map_values(&f);
        assert_eq!(d.module_dim(), 2);
        assert_eq!(d.value(&[1]), vec![q.from_i64(2), q.from_i64(-2)]);
    }
}
