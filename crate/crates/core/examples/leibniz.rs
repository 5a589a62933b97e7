//! Leibniz cohomology and crossed modules of Leibniz algebras.

use std::sync::Arc;

use crossed_ext::algebra::{catalog, LeibnizModule, LeibnizModuleMorphism};
use crossed_ext::cohomology::{apply_coboundary, cohomology, cohomology_table};
use crossed_ext::crossed::{leibniz_choose_sections, leibniz_classify2, leibniz_theta, leibniz_yoneda_crossed_module, LeibnizCrossedModule};
use crossed_ext::exactlin::{Field, LinearMap, Matrix};

fn main() {
    let q = Field::Rational;
    let h = Arc::new(catalog::leibniz_two_squares(q));
    for (name, m) in [("trivial", LeibnizModule::trivial(h.clone(), 1)), ("adjoint", LeibnizModule::adjoint(&h))] {
        let dims: Vec<usize> = cohomology_table(&m, 3).iter().map(|g| g.dim).collect();
        println!("[x,x] = [y,y] = z, {name} coefficients: dim HL⁰..HL³ = {dims:?}");
    }

    // x, y act on the left by a Jordan block, trivially on the right.
    let n = Matrix::from_i64(q, &[&[0, 1], &[0, 0]]);
    let z = Matrix::zeros(q, 2, 2);
    let mid = LeibnizModule::new(h.clone(), 2, vec![n.clone(), n, z.clone()], vec![z.clone(), z.clone(), z]).unwrap();
    let k = LeibnizModule::trivial(h.clone(), 1);
    let alpha = LeibnizModuleMorphism::new(k.clone(), mid.clone(), LinearMap::new(Matrix::from_i64(q, &[&[1], &[0]]))).unwrap();
    let beta = LeibnizModuleMorphism::new(mid, k.clone(), LinearMap::new(Matrix::from_i64(q, &[&[0, 1]]))).unwrap();
    for c in cohomology(&k, 2).basis {
        let (cm, pair) = leibniz_yoneda_crossed_module(&alpha, &beta, c.representative()).unwrap();
        let sections = leibniz_choose_sections(&cm, &pair);
        let theta = leibniz_theta(&cm, &pair, &sections).unwrap();
        let cocycle = apply_coboundary(pair.kernel(), &theta).is_zero();
        let class = leibniz_classify2(&cm, &pair).unwrap();
        println!("Yoneda crossed module: θ is a cocycle: {cocycle}, class zero: {}", class.is_zero());
    }

    let id = LeibnizCrossedModule::identity(&h);
    println!("identity crossed module has coker of dim {}", id.induced_pair().unwrap().g().dim());
}
