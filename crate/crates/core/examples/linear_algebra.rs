//! Exact kernels, images, quotients and solves over the rationals and F_p.

use crossed_ext::exactlin::{image, kernel, linear_section, quotient, solve, Field, LinearMap, Matrix};

fn main() {
    for field in [Field::Rational, Field::Prime(5)] {
        let f = LinearMap::new(Matrix::from_i64(field, &[&[1, 2, 3], &[2, 4, 6], &[1, 0, 1]]));
        let ker = kernel(&f);
        let im = image(&f);
        println!("over {field}: rank {}, kernel dim {}, image dim {}", f.rank(), ker.dim(), im.dim());
        for v in ker.basis_vectors() {
            println!("  kernel vector {v:?}");
        }
        let q = quotient(3, &im);
        println!("  codomain / image has dim {}", q.dim);
        let target = f.apply(&[field.one(), field.one(), field.zero()]);
        let x = solve(&f, &target).expect("target is in the image");
        println!("  solve f x = {target:?} gives x = {x:?}");
    }
    let pi = LinearMap::new(Matrix::from_i64(Field::Rational, &[&[1, 1, 0], &[0, 1, 1]]));
    let s = linear_section(&pi);
    println!("section of a surjection: {:?}, pi s = id: {}", s.matrix(), pi.compose(&s) == LinearMap::identity(Field::Rational, 2));
    let half = Field::Rational.parse("-3/6").unwrap();
    println!("parsed -3/6 as {half}; over F_7 it is {}", Field::Prime(7).parse("-3/6").unwrap());
}
