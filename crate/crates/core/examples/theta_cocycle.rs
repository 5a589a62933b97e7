//! The 3-cocycle of a crossed module and how it depends on sections.

use std::sync::Arc;

use crossed_ext::algebra::{adjoint, catalog};
use crossed_ext::cohomology::coboundary_witness;
use crossed_ext::crossed::{choose_sections, classify2, theta, theta_table, CrossedModule, Sections};
use crossed_ext::exactlin::{kernel, Field, LinearMap, Matrix, Subspace};

fn main() {
    let q = Field::Rational;
    // V = center ⊕ k2 over heisenberg ⊕ k, with ∂ the inclusion of the
    // center; the extra summand carries a Jordan block for e.
    let l = Arc::new(catalog::heisenberg(q).direct_sum(&crossed_ext::algebra::LieAlgebra::abelian(q, 1)));
    let center = Subspace::span(q, 4, &[vec![q.zero(), q.zero(), q.one(), q.zero()]]);
    let (z, incl) = adjoint(&l).submodule(&center).unwrap();
    let n = Matrix::from_i64(q, &[&[0, 1], &[0, 0]]);
    let zero = Matrix::zeros(q, 2, 2);
    let extra = crossed_ext::algebra::Representation::new(l.clone(), 2, vec![n, zero.clone(), zero.clone(), zero]).unwrap();
    let v = z.direct_sum(&extra).unwrap();
    let cm = CrossedModule::new(v, incl.juxtapose(&LinearMap::zero(q, 2, 4))).unwrap();
    let pair = cm.induced_pair().unwrap();
    println!("coker ∂ has dim {}, ker ∂ has dim {}", pair.g().dim(), pair.kernel().dim());

    let s1 = choose_sections(&cm, &pair);
    let table = theta_table(&cm, &pair, &s1).unwrap();
    println!("θ alternating: {}, values in ker ∂: {}", table.is_alternating(), table.values_in(&kernel(cm.partial())));
    let t1 = theta(&cm, &pair, &s1).unwrap();

    // Other sections: shift s by ∂R and q by ι R'.
    let r = LinearMap::new(Matrix::from_i64(q, &[&[1, 0, 2], &[0, 0, 0], &[0, 0, 0]]));
    let r2 = LinearMap::new(Matrix::from_i64(q, &[&[0, 0, 1, 0], &[0, 0, 3, 0]]));
    let s2 = Sections { s: s1.s.add(&cm.partial().compose(&r)), q: s1.q.add(&pair.inclusion().compose(&r2)) };
    let t2 = theta(&cm, &pair, &s2).unwrap();
    let w = coboundary_witness(pair.kernel(), &t1.sub(&t2)).unwrap();
    println!("θ for the second choice differs from the first by a coboundary: {}", t1 == t2 || w.is_some());
    println!("class in H³(g, M) is zero: {}", classify2(&cm, &pair).unwrap().is_zero());
}
