//! Baer sums, negatives and the zero extension at length 2, read through
//! the classifier.

use std::sync::Arc;

use crossed_ext::algebra::{LieAlgebra, Representation};
use crossed_ext::cohomology::{cohomology, ShortExactSequence};
use crossed_ext::crossed::yoneda_crossed_module;
use crossed_ext::exactlin::{vector, Field, Matrix, Subspace};
use crossed_ext::extensions::{baer_sum, classify_n2, negate, zero_extension, CrossedExtension};

fn main() {
    let q = Field::Rational;
    let g = Arc::new(LieAlgebra::abelian(q, 3));
    let e01 = Matrix::from_i64(q, &[&[0, 1, 0], &[0, 0, 0], &[0, 0, 0]]);
    let e02 = Matrix::from_i64(q, &[&[0, 0, 1], &[0, 0, 0], &[0, 0, 0]]);
    let mid = Representation::new(g, 3, vec![e01, e02, Matrix::zeros(q, 3, 3)]).unwrap();
    let ses = ShortExactSequence::from_submodule(&mid, &Subspace::span(q, 3, &[vector::unit(q, 3, 0)])).unwrap();

    let exts: Vec<CrossedExtension> = cohomology(ses.quotient(), 2)
        .basis
        .iter()
        .take(3)
        .map(|c| {
            let (cm, pair) = yoneda_crossed_module(&ses, c.representative()).unwrap();
            CrossedExtension::from_crossed_module(&cm, &pair)
        })
        .collect();
    let (a, b) = (&exts[1], &exts[2]);
    let (ca, cb) = (classify_n2(a).unwrap(), classify_n2(b).unwrap());
    let sum = baer_sum(a, b).unwrap();
    println!("E + E' has L of dim {} and V of dim {}", sum.base().algebra().dim(), sum.base().module().dim());
    println!("class(E + E') = class(E) + class(E'): {}", classify_n2(&sum).unwrap() == ca.add(&cb));
    println!("class(−E) = −class(E): {}", classify_n2(&negate(a)).unwrap() == ca.neg());
    let zero = zero_extension(a.kernel_module(), 2);
    println!("class(0) = 0: {}", classify_n2(&zero).unwrap().is_zero());
    println!("E + (−E) classifies to 0: {}", classify_n2(&baer_sum(a, &negate(a)).unwrap()).unwrap().is_zero());
}
