//! Small algebras used in examples and tests.

use super::{LeibnizAlgebra, LieAlgebra, StructureConstants};
use crate::exactlin::Field;

/// sl2 in the basis `(e, f, h)`: `[e,f] = h`, `[h,e] = 2e`, `[h,f] = −2f`.
pub fn sl2(field: Field) -> LieAlgebra {
    let sc = StructureConstants::antisymmetric_from_i64(field, 3, &[(0, 1, 2, 1), (2, 0, 0, 2), (2, 1, 1, -2)]);
    LieAlgebra::new(sc).expect("sl2 is a Lie algebra")
}

/// Heisenberg algebra `(e, f, h)` with `[e,f] = h`.
pub fn heisenberg(field: Field) -> LieAlgebra {
    let sc = StructureConstants::antisymmetric_from_i64(field, 3, &[(0, 1, 2, 1)]);
    LieAlgebra::new(sc).expect("Heisenberg is a Lie algebra")
}

/// The non-abelian two-dimensional algebra `(x, y)` with `[x,y] = y`.
pub fn affine2(field: Field) -> LieAlgebra {
    let sc = StructureConstants::antisymmetric_from_i64(field, 2, &[(0, 1, 1, 1)]);
    LieAlgebra::new(sc).expect("aff(1) is a Lie algebra")
}

/// so3 in the basis `(x, y, z)` with cyclic brackets `[x,y] = z`.
pub fn so3(field: Field) -> LieAlgebra {
    let sc = StructureConstants::antisymmetric_from_i64(field, 3, &[(0, 1, 2, 1), (1, 2, 0, 1), (2, 0, 1, 1)]);
    LieAlgebra::new(sc).expect("so3 is a Lie algebra")
}

/// Upper triangular 2x2 matrices `(a, b, c)` = `(E11, E12, E22)`.
pub fn borel2(field: Field) -> LieAlgebra {
    let sc = StructureConstants::antisymmetric_from_i64(field, 3, &[(0, 1, 1, 1), (1, 2, 1, 1)]);
    LieAlgebra::new(sc).expect("b2 is a Lie algebra")
}

/// The four-dimensional filiform algebra `[e0,e1] = e2`, `[e0,e2] = e3`.
pub fn filiform4(field: Field) -> LieAlgebra {
    let sc = StructureConstants::antisymmetric_from_i64(field, 4, &[(0, 1, 2, 1), (0, 2, 3, 1)]);
    LieAlgebra::new(sc).expect("filiform algebra is a Lie algebra")
}

/// The two-dimensional Leibniz algebra `(x, y)` with `[x,x] = y`.
pub fn leibniz_square_zero(field: Field) -> LeibnizAlgebra {
    let sc = StructureConstants::from_i64(field, 2, &[(0, 0, 1, 1)]);
    LeibnizAlgebra::new(sc).expect("[x,x] = y is Leibniz")
}

/// A three-dimensional non-Lie Leibniz algebra `(x, y, z)`: `[x,x] = z`,
/// `[y,y] = z`.
pub fn leibniz_two_squares(field: Field) -> LeibnizAlgebra {
    let sc = StructureConstants::from_i64(field, 3, &[(0, 0, 2, 1), (1, 1, 2, 1)]);
    LeibnizAlgebra::new(sc).expect("two squares is Leibniz")
}

/// Non-Lie Leibniz algebra `(x, y)` with `[y,x] = y`, all other brackets 0.
pub fn leibniz_right_affine(field: Field) -> LeibnizAlgebra {
    let sc = StructureConstants::from_i64(field, 2, &[(1, 0, 1, 1)]);
    LeibnizAlgebra::new(sc).expect("[y,x] = y is Leibniz")
}
