//! Pushouts of g-modules and their universal property.

use std::sync::Arc;

use crossed_ext::algebra::{catalog, ModuleMorphism, Representation};
use crossed_ext::exactlin::{Field, LinearMap, Matrix};
use crossed_ext::extensions::{mediate, pushout};

fn main() {
    let q = Field::Rational;
    let g = Arc::new(catalog::affine2(q));
    // k with x acting by 1, mapped into two copies of the 2-dim module with
    // x acting by a Jordan block.
    let k = Representation::new(g.clone(), 1, vec![Matrix::from_i64(q, &[&[1]]), Matrix::zeros(q, 1, 1)]).unwrap();
    let j = Matrix::from_i64(q, &[&[1, 1], &[0, 1]]);
    let b = Representation::new(g.clone(), 2, vec![j, Matrix::zeros(q, 2, 2)]).unwrap();
    let f = ModuleMorphism::new(k.clone(), b.clone(), LinearMap::new(Matrix::from_i64(q, &[&[1], &[0]]))).unwrap();
    let g2 = ModuleMorphism::new(k, b.clone(), LinearMap::new(Matrix::from_i64(q, &[&[2], &[0]]))).unwrap();

    let (d, po) = pushout(&f, &g2).unwrap();
    println!("pushout has dim {}", d.dim());
    println!("i f = j g: {}", po.i.compose(f.map()) == po.j.compose(g2.map()));

    // The cocone (2·id, id) into B factors through D.
    let id = LinearMap::identity(q, 2);
    let two = id.add(&id);
    let theta = mediate(&po, &two, &id).unwrap();
    println!("θ i = i': {}, θ j = j': {}", theta.compose(&po.i) == two, theta.compose(&po.j) == id);
    println!("θ = {:?}", theta.matrix());
}
