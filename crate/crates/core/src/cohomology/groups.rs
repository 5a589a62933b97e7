use std::sync::Arc;

use crate::exactlin::{image, kernel, solve, vector, LinearMap, Scalar, Subspace};

use super::complex::{apply_coboundary, Coefficients};
use super::{Cochain, CohomologyError, Flavor};

/// `B^n = image(δ_{n−1}) ⊂ C^n` (zero in degree 0).
pub fn boundaries<C: Coefficients + ?Sized>(coeffs: &C, n: usize) -> Subspace {
    if n == 0 {
        return Subspace::zero(coeffs.field(), coeffs.cochain_dim(0));
    }
    image(&dense(coeffs, n - 1))
}

/// `Z^n = kernel(δ_n) ⊂ C^n`.
pub fn cocycles<C: Coefficients + ?Sized>(coeffs: &C, n: usize) -> Subspace {
    kernel(&dense(coeffs, n))
}

fn dense<C: Coefficients + ?Sized>(coeffs: &C, n: usize) -> LinearMap {
    LinearMap::new(coeffs.coboundary(n).to_dense())
}

/// An element of `H^n`, stored with its representative reduced against the
/// canonical basis of the coboundary space. Equality compares the reduced
/// representatives only.
#[derive(Clone, Debug)]
pub struct CohomologyClass {
    representative: Cochain,
    boundaries: Arc<Subspace>,
    canonical: Cochain,
}

impl PartialEq for CohomologyClass {
    fn eq(&self, other: &Self) -> bool {
        self.canonical == other.canonical
    }
}

impl Eq for CohomologyClass {}

impl CohomologyClass {
    fn from_parts(representative: Cochain, boundaries: Arc<Subspace>) -> Self {
        let reduced = boundaries.reduce(representative.coeffs());
        let canonical = Cochain::from_vector(
            representative.flavor(),
            representative.field(),
            representative.algebra_dim(),
            representative.module_dim(),
            representative.degree(),
            reduced,
        );
        CohomologyClass { representative, boundaries, canonical }
    }

    pub fn degree(&self) -> usize {
        self.representative.degree()
    }

    pub fn flavor(&self) -> Flavor {
        self.representative.flavor()
    }

    pub fn representative(&self) -> &Cochain {
        &self.representative
    }

    pub fn coboundary_space(&self) -> &Subspace {
        &self.boundaries
    }

    /// The representative reduced modulo coboundaries.
    pub fn canonical_form(&self) -> &Cochain {
        &self.canonical
    }

    pub fn is_zero(&self) -> bool {
        self.canonical.is_zero()
    }

    fn combine(&self, other: &CohomologyClass, rep: Cochain) -> CohomologyClass {
        assert_eq!(*self.boundaries, *other.boundaries, "classes live in different complexes");
        CohomologyClass::from_parts(rep, self.boundaries.clone())
    }

    pub fn add(&self, other: &CohomologyClass) -> CohomologyClass {
        self.combine(other, self.representative.add(&other.representative))
    }

    pub fn sub(&self, other: &CohomologyClass) -> CohomologyClass {
        self.combine(other, self.representative.sub(&other.representative))
    }

    pub fn neg(&self) -> CohomologyClass {
        CohomologyClass::from_parts(self.representative.neg(), self.boundaries.clone())
    }

    pub fn scale(&self, c: &Scalar) -> CohomologyClass {
        CohomologyClass::from_parts(self.representative.scale(c), self.boundaries.clone())
    }

    /// The zero class of the same group.
    pub fn zero_like(&self) -> CohomologyClass {
        self.scale(&self.representative.field().zero())
    }
}

/// Class of a cocycle; fails when `δz ≠ 0`.
pub fn class_of<C: Coefficients + ?Sized>(coeffs: &C, z: &Cochain) -> Result<CohomologyClass, CohomologyError> {
    if !coeffs.accepts(z) {
        return Err(CohomologyError::Shape("cochain does not belong to this complex".into()));
    }
    if !apply_coboundary(coeffs, z).is_zero() {
        return Err(CohomologyError::NotACocycle { degree: z.degree() });
    }
    Ok(CohomologyClass::from_parts(z.clone(), Arc::new(boundaries(coeffs, z.degree()))))
}

/// The zero class in degree `n`.
pub fn zero_class<C: Coefficients + ?Sized>(coeffs: &C, n: usize) -> CohomologyClass {
    CohomologyClass::from_parts(coeffs.zero_cochain(n), Arc::new(boundaries(coeffs, n)))
}

/// Some `b` with `δb = z`, or `None` when `[z] ≠ 0`. Degree 0 has no
/// preimages and always gives `None`.
pub fn coboundary_witness<C: Coefficients + ?Sized>(coeffs: &C, z: &Cochain) -> Result<Option<Cochain>, CohomologyError> {
    if !coeffs.accepts(z) {
        return Err(CohomologyError::Shape("cochain does not belong to this complex".into()));
    }
    if !apply_coboundary(coeffs, z).is_zero() {
        return Err(CohomologyError::NotACocycle { degree: z.degree() });
    }
    let n = z.degree();
    if n == 0 {
        return Ok(None);
    }
    Ok(solve(&dense(coeffs, n - 1), z.coeffs()).map(|b| {
        Cochain::from_vector(coeffs.flavor(), coeffs.field(), coeffs.algebra_dim(), coeffs.module_dim(), n - 1, b)
    }))
}

/// One degree of a cohomology computation.
#[derive(Clone, Debug)]
pub struct CohomologyGroup {
    pub degree: usize,
    pub cochain_dim: usize,
    /// `rank δ_n`
    pub rank: usize,
    /// `rank δ_{n−1}`
    pub rank_previous: usize,
    pub dim: usize,
    pub basis: Vec<CohomologyClass>,
}

/// `H^n` with a basis of classes. Basis vectors are taken greedily from the
/// RREF basis of the cocycles, skipping those dependent modulo coboundaries.
pub fn cohomology<C: Coefficients + ?Sized>(coeffs: &C, n: usize) -> CohomologyGroup {
    let field = coeffs.field();
    let b = Arc::new(boundaries(coeffs, n));
    let z = cocycles(coeffs, n);
    let cochain_dim = coeffs.cochain_dim(n);
    let mut span = (*b).clone();
    let mut basis = Vec::new();
    for v in z.basis_vectors() {
        if span.contains(&v) {
            continue;
        }
        span = span.join(&Subspace::span(field, cochain_dim, &[v.clone()]));
        let rep = Cochain::from_vector(coeffs.flavor(), field, coeffs.algebra_dim(), coeffs.module_dim(), n, v);
        basis.push(CohomologyClass::from_parts(rep, b.clone()));
    }
    let rank = cochain_dim - z.dim();
    CohomologyGroup { degree: n, cochain_dim, rank, rank_previous: b.dim(), dim: basis.len(), basis }
}

/// `H^0, …, H^max_degree`.
pub fn cohomology_table<C: Coefficients + ?Sized>(coeffs: &C, max_degree: usize) -> Vec<CohomologyGroup> {
    (0..=max_degree).map(|n| cohomology(coeffs, n)).collect()
}

/// Total dimension of `C^0 ⊕ … ⊕ C^{max_degree + 1}`, the size of the data
/// a cohomology table up to `max_degree` touches.
pub fn total_cochain_dim<C: Coefficients + ?Sized>(coeffs: &C, max_degree: usize) -> usize {
    (0..=max_degree + 1).map(|n| coeffs.cochain_dim(n)).sum()
}

/// Invariants `{ m : [x, m] = 0 }` of a Lie module.
pub fn h0_invariants(rep: &crate::algebra::Representation) -> Subspace {
    rep.invariants()
}

/// Whether a cochain is zero modulo coboundaries.
pub fn is_coboundary<C: Coefficients + ?Sized>(coeffs: &C, z: &Cochain) -> bool {
    let n = z.degree();
    if n == 0 {
        return vector::is_zero(z.coeffs());
    }
    boundaries(coeffs, n).contains(z.coeffs())
}
