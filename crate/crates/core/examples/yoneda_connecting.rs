//! A short exact sequence of modules spliced with an abelian extension gives
//! a crossed module whose class is the connecting image of the 2-class.

use std::sync::Arc;

use crossed_ext::algebra::{LieAlgebra, Representation};
use crossed_ext::cohomology::{cohomology, connecting_hom, ShortExactSequence};
use crossed_ext::crossed::{classify2, yoneda_crossed_module};
use crossed_ext::exactlin::{vector, Field, Matrix, Subspace};

fn main() {
    let q = Field::Rational;
    let g = Arc::new(LieAlgebra::abelian(q, 3));
    let n = Matrix::from_i64(q, &[&[0, 1], &[0, 0]]);
    let z = Matrix::zeros(q, 2, 2);
    let jordan = Representation::new(g, 2, vec![n, z.clone(), z]).unwrap();
    let ses = ShortExactSequence::from_submodule(&jordan, &Subspace::span(q, 2, &[vector::unit(q, 2, 0)])).unwrap();

    let h2 = cohomology(ses.quotient(), 2);
    println!("H²(g, k) has dim {}", h2.dim);
    for (i, class) in h2.basis.iter().enumerate() {
        let (cm, pair) = yoneda_crossed_module(&ses, class.representative()).unwrap();
        let via_crossed = classify2(&cm, &pair).unwrap();
        let via_snake = connecting_hom(&ses, class).unwrap();
        println!(
            "basis class {i}: L has dim {}, V has dim {}; class {} zero; agrees with connecting map: {}",
            cm.algebra().dim(),
            cm.module().dim(),
            if via_crossed.is_zero() { "is" } else { "is not" },
            via_crossed == via_snake
        );
    }
}
