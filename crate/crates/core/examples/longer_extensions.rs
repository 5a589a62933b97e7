//! Crossed 3- and 4-fold extensions built by splicing, with splitting
//! detection.

use std::sync::Arc;

use crossed_ext::algebra::{LieAlgebra, ModuleMorphism, Representation};
use crossed_ext::cohomology::{cohomology, ShortExactSequence};
use crossed_ext::crossed::yoneda_crossed_module;
use crossed_ext::exactlin::{vector, Field, Matrix, Subspace};
use crossed_ext::extensions::{opext_connecting, push_forward, split_detect, zero_extension, CrossedExtension};

fn main() {
    let q = Field::Rational;
    let g = Arc::new(LieAlgebra::abelian(q, 3));
    let n = Matrix::from_i64(q, &[&[0, 1], &[0, 0]]);
    let z = Matrix::zeros(q, 2, 2);
    let jordan = Representation::new(g, 2, vec![n, z.clone(), z]).unwrap();
    let ses = ShortExactSequence::from_submodule(&jordan, &Subspace::span(q, 2, &[vector::unit(q, 2, 0)])).unwrap();

    let e3 = opext_connecting(&ses, &zero_extension(ses.quotient(), 2)).unwrap();
    println!("δ(0) has length {}; exact at every node: {}", e3.n(), e3.exactness().iter().all(|(_, ok)| *ok));
    println!("its head has an equivariant retraction: {}", split_detect(&e3).unwrap().is_some());

    let c = &cohomology(ses.quotient(), 2).basis[1];
    let (cm, pair) = yoneda_crossed_module(&ses, c.representative()).unwrap();
    let e4 = opext_connecting(&ses, &opext_connecting(&ses, &CrossedExtension::from_crossed_module(&cm, &pair)).unwrap()).unwrap();
    println!("twice spliced Yoneda extension has length {}, nodes {:?}", e4.n(), e4.node_names());

    // Pushing forward along the head always splits.
    let f = ModuleMorphism::new(e4.kernel_module().clone(), e4.chain()[0].clone(), e4.head().clone()).unwrap();
    let pushed = push_forward(&f, &e4).unwrap();
    let witness = split_detect(&pushed).unwrap().expect("pushed-forward extension splits");
    println!("retraction onto the new kernel: {:?}", witness.retraction.matrix());
}
