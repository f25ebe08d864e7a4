//! Built-in examples: group algebras and their duals, matrix algebras,
//! Sweedler's four-dimensional Hopf algebra and irreducible bundles.

mod bundles;
mod group;

use std::sync::Arc;

pub use bundles::{irreducible_bundle, IrreducibleBundle};
pub use group::{
    cycle_label, cyclic_group, dual_group_hopf, group_from_generators, group_from_generators_bounded, group_hopf,
    linear_characters, parse_cycles, symmetric_group, DualGroupHopf, GroupHopf, GroupTable, DEFAULT_CLOSURE_BOUND,
};

use crate::algebra::Algebra;
use crate::error::{Error, Result};
use crate::frobenius::FrobeniusStructure;
use crate::hopf::Hopf;
use crate::math::{Field, Matrix};

/// `M_n(k)` on matrix units `E_ij` (index `i * n + j`) with the trace form.
pub fn matrix_algebra(n: usize, field: &Field) -> Result<(Arc<Algebra>, FrobeniusStructure)> {
    if n == 0 {
        return Err(Error::ShapeMismatch("matrix algebra of size 0".into()));
    }
    let idx = |i: usize, j: usize| i * n + j;
    let mut mul = Vec::with_capacity(n * n * n);
    for i in 0..n {
        for j in 0..n {
            for l in 0..n {
                mul.push((idx(i, j), idx(j, l), idx(i, l), field.one()));
            }
        }
    }
    let mut unit = vec![field.zero(); n * n];
    for i in 0..n {
        unit[idx(i, i)] = field.one();
    }
    let labels = (0..n).flat_map(|i| (0..n).map(move |j| format!("E{}{}", i + 1, j + 1))).collect();
    let algebra = Algebra::from_triples(field, n * n, labels, unit.clone(), mul)?;
    let fs = FrobeniusStructure::new(&algebra, unit)?;
    // dual basis of E_ij is E_ji
    for i in 0..n {
        for j in 0..n {
            if fs.y(idx(i, j)) != &algebra.basis_element(idx(j, i)) {
                return Err(Error::Corruption(format!("dual basis of E{}{}", i + 1, j + 1)));
            }
        }
    }
    if fs.casimir_element() != algebra.unit().scale(&field.from_int(n as i64)) {
        return Err(Error::Corruption("Casimir element of the trace form is not n".into()));
    }
    Ok((algebra, fs))
}

/// Basis `1, g, x, gx` with `g^2 = 1`, `x^2 = 0`, `xg = -gx`,
/// `Delta x = x (x) 1 + g (x) x`, `S(x) = -gx`.
pub fn sweedler_h4(field: &Field) -> Result<Arc<Hopf>> {
    if field.characteristic() == 2 {
        return Err(Error::CharacteristicTwo);
    }
    let one = field.one();
    let neg = field.from_int(-1);
    let (e, g, x, gx) = (0, 1, 2, 3);
    let mut mul = Vec::new();
    for a in 0..4 {
        mul.push((e, a, a, one.clone()));
        if a != e {
            mul.push((a, e, a, one.clone()));
        }
    }
    mul.extend([
        (g, g, e, one.clone()),
        (g, x, gx, one.clone()),
        (g, gx, x, one.clone()),
        (x, g, gx, neg.clone()),
        (gx, g, x, neg.clone()),
    ]);
    let labels = ["1", "g", "x", "gx"].map(String::from).to_vec();
    let unit = vec![one.clone(), field.zero(), field.zero(), field.zero()];
    let algebra = Algebra::from_triples(field, 4, labels, unit, mul)?;
    // Delta(gx) = Delta(g) Delta(x) = gx (x) g + 1 (x) gx
    let comul = vec![
        (e, e, e, one.clone()),
        (g, g, g, one.clone()),
        (x, x, e, one.clone()),
        (x, g, x, one.clone()),
        (gx, gx, g, one.clone()),
        (gx, e, gx, one.clone()),
    ];
    let counit = vec![one.clone(), one.clone(), field.zero(), field.zero()];
    let antipode = Matrix::from_ints(field, &[&[1, 0, 0, 0], &[0, 1, 0, 0], &[0, 0, 0, 1], &[0, 0, -1, 0]]);
    Hopf::new(&algebra, comul, counit, antipode)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn matrix_algebra_casimir() {
        let q = Field::rationals();
        for n in 1..=3 {
            let (a, fs) = matrix_algebra(n, &q).unwrap();
            assert!(fs.is_symmetric());
            let chi = a.regular_character().unwrap();
            let expected: Vec<_> = fs.lambda().iter().map(|t| t * &q.from_int(n as i64)).collect();
            assert_eq!(chi, expected);
        }
    }

    #[test]
    fn sweedler_shape() {
        let h = sweedler_h4(&Field::rationals()).unwrap();
        let s2 = h.antipode() * h.antipode();
        assert_eq!(s2.get(2, 2), &Field::rationals().from_int(-1));
        assert_eq!(sweedler_h4(&Field::prime(2).unwrap()).unwrap_err(), Error::CharacteristicTwo);
    }
}
