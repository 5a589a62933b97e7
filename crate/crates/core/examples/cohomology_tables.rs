//! Cohomology dimensions of small algebras, in both complexes.

use std::sync::Arc;

use crossed_ext::algebra::{adjoint, catalog, LeibnizModule, LieAlgebra, Representation};
use crossed_ext::cohomology::{cohomology_table, Coefficients};
use crossed_ext::exactlin::Field;

fn dims<C: Coefficients>(c: &C, max: usize) -> Vec<usize> {
    cohomology_table(c, max).iter().map(|h| h.dim).collect()
}

fn main() {
    let q = Field::Rational;
    let algebras: Vec<(&str, LieAlgebra)> = vec![
        ("sl2", catalog::sl2(q)),
        ("so3", catalog::so3(q)),
        ("heisenberg", catalog::heisenberg(q)),
        ("affine2", catalog::affine2(q)),
        ("borel2", catalog::borel2(q)),
        ("filiform4", catalog::filiform4(q)),
        ("abelian3", LieAlgebra::abelian(q, 3)),
    ];
    println!("{:<12} {:<18} {:<18} {}", "algebra", "CE trivial", "CE adjoint", "Leibniz trivial (to H³)");
    for (name, g) in algebras {
        let g = Arc::new(g);
        let k = Representation::trivial(g.clone(), 1);
        let ad = adjoint(&g);
        let lk = LeibnizModule::from_lie(&k);
        println!("{name:<12} {:<18} {:<18} {:?}", format!("{:?}", dims(&k, g.dim())), format!("{:?}", dims(&ad, g.dim())), dims(&lk, 3));
    }
    // The Leibniz complex sees more than the Lie one, even for Lie algebras.
    let h = Arc::new(catalog::leibniz_square_zero(q));
    println!("[x,x] = y with trivial coefficients: {:?}", dims(&LeibnizModule::trivial(h, 1), 4));
}
