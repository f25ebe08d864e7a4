use falab::math::matrix::eval_poly_at_matrix;
use falab::math::{char_poly, integer_roots, kernel_basis, lattice_meet_line, solve_linear, Field, IntLattice, Matrix, Scalar};
use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};
use proptest::prelude::*;

fn fields() -> Vec<Field> {
    vec![Field::rationals(), Field::prime(7).unwrap(), Field::prime(101).unwrap(), Field::cyclotomic(5).unwrap()]
}

fn matrix_from(f: &Field, n: usize, entries: &[i64]) -> Matrix {
    let rows = (0..n).map(|i| (0..n).map(|j| f.from_int(entries[i * n + j])).collect()).collect();
    Matrix::from_rows(f, rows).unwrap()
}

fn eval(p: &[Scalar], t: &Scalar) -> Scalar {
    p.iter().rev().fold(t.field().zero(), |acc, c| &(&acc * t) + c)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn char_poly_matches_determinant(n in 1usize..5, entries in prop::collection::vec(-4i64..5, 16), fi in 0usize..3) {
        let f = &fields()[fi];
        let a = matrix_from(f, n, &entries);
        let p = char_poly(&a).unwrap();
        prop_assert_eq!(p.len(), n + 1);
        prop_assert!(p[n].is_one());
        for t in -2i64..=2 {
            let ts = f.from_int(t);
            let m = Matrix::identity(f, n).scale(&ts).sub(&a);
            prop_assert_eq!(eval(&p, &ts), m.det().unwrap());
        }
        prop_assert!(eval_poly_at_matrix(&p, &a).is_zero());
    }

    #[test]
    fn solve_and_kernel(rows in 1usize..5, cols in 1usize..5, entries in prop::collection::vec(-3i64..4, 16), rhs in prop::collection::vec(-3i64..4, 4), fi in 0usize..4) {
        let f = &fields()[fi];
        let a = Matrix::from_rows(f, (0..rows).map(|i| (0..cols).map(|j| f.from_int(entries[i * 4 + j])).collect()).collect()).unwrap();
        let ker = kernel_basis(&a);
        prop_assert_eq!(ker.len(), cols - a.rank());
        for k in &ker {
            prop_assert!(a.mul_vec(k).iter().all(Scalar::is_zero));
        }
        let b: Vec<Scalar> = rhs[..rows].iter().map(|&x| f.from_int(x)).collect();
        match solve_linear(&a, &b).unwrap() {
            Some(x) => prop_assert_eq!(a.mul_vec(&x), b),
            None => {
                // inconsistent: appending b raises the rank
                let mut wide: Vec<Vec<Scalar>> = a.row_vectors();
                for (r, bi) in wide.iter_mut().zip(&b) {
                    r.push(bi.clone());
                }
                prop_assert!(Matrix::from_rows(f, wide).unwrap().rank() > a.rank());
            }
        }
    }

    #[test]
    fn inverse_is_two_sided(n in 1usize..5, entries in prop::collection::vec(-5i64..6, 16), fi in 0usize..4) {
        let f = &fields()[fi];
        let a = matrix_from(f, n, &entries);
        match a.inverse() {
            Some(inv) => {
                prop_assert!((&a * &inv).is_identity());
                prop_assert!((&inv * &a).is_identity());
                prop_assert!(!a.det().unwrap().is_zero());
            }
            None => prop_assert!(a.det().unwrap().is_zero()),
        }
    }

    #[test]
    fn integer_roots_recover_factors(roots in prop::collection::vec(-6i64..7, 0..5), extra in any::<bool>()) {
        // prod (x - r) times optionally x^2 + 1
        let mut p = vec![BigInt::one()];
        let mut factors: Vec<Vec<BigInt>> = roots.iter().map(|&r| vec![BigInt::from(-r), BigInt::one()]).collect();
        if extra {
            factors.push(vec![BigInt::one(), BigInt::zero(), BigInt::one()]);
        }
        for fac in &factors {
            let mut next = vec![BigInt::zero(); p.len() + fac.len() - 1];
            for (i, a) in p.iter().enumerate() {
                for (j, b) in fac.iter().enumerate() {
                    next[i + j] += a * b;
                }
            }
            p = next;
        }
        let found = integer_roots(&p).unwrap();
        let mut expected: Vec<BigInt> = roots.iter().map(|&r| BigInt::from(r)).collect();
        expected.sort_by(|a, b| b.cmp(a));
        prop_assert_eq!(found.roots, expected);
        prop_assert_eq!(found.complete, !extra);
    }

    #[test]
    fn lattice_meet_matches_inverse_denominators(entries in prop::collection::vec(-5i64..6, 9), v in prop::collection::vec(-4i64..5, 3), redundant in prop::collection::vec(-2i64..3, 3)) {
        let q = Field::rationals();
        let b = matrix_from(&q, 3, &entries);
        prop_assume!(!b.det().unwrap().is_zero());
        prop_assume!(v.iter().any(|&x| x != 0));
        let basis: Vec<Vec<BigInt>> = (0..3).map(|i| entries[i * 3..i * 3 + 3].iter().map(|&x| BigInt::from(x)).collect()).collect();
        // an extra generator in the span changes nothing
        let extra: Vec<BigInt> = (0..3).map(|j| (0..3).map(|i| &basis[i][j] * redundant[i]).sum()).collect();
        let mut gens = basis.clone();
        gens.push(extra);
        let lattice = IntLattice::from_generators(3, &gens).unwrap();
        // rows of B generate L, so d v in L iff d (B^T)^{-1} v is integral
        let coords = b.transpose().inverse().unwrap().mul_vec(&v.iter().map(|&x| q.from_int(x)).collect::<Vec<_>>());
        let expected = coords.iter().fold(BigInt::one(), |acc, c| acc.lcm(c.as_rational().unwrap().denom()));
        let vb: Vec<BigInt> = v.iter().map(|&x| BigInt::from(x)).collect();
        prop_assert_eq!(lattice_meet_line(&lattice, &vb).unwrap(), expected.clone());
        for g in &gens {
            prop_assert!(lattice.contains(g));
        }
        let scaled: Vec<BigInt> = vb.iter().map(|x| x * &expected).collect();
        prop_assert!(lattice.contains(&scaled));
    }

    #[test]
    fn field_inverses(a in -50i64..50, b in 1i64..50, c in prop::collection::vec(-3i64..4, 4)) {
        let q = Field::rationals();
        let x = q.from_rational(&BigRational::new(a.into(), b.into())).unwrap();
        if !x.is_zero() {
            prop_assert!((&x * &x.inv().unwrap()).is_one());
        }
        let cyc = Field::cyclotomic(5).unwrap();
        let coeffs: Vec<BigRational> = c.iter().map(|&k| BigRational::from_integer(k.into())).collect();
        let y = cyc.from_coefficients(&coeffs).unwrap();
        if !y.is_zero() {
            prop_assert!((&y * &y.inv().unwrap()).is_one());
        }
        let p = Field::prime(13).unwrap();
        let z = p.from_int(a);
        if !z.is_zero() {
            prop_assert!((&z * &z.inv().unwrap()).is_one());
        }
    }
}

#[test]
fn cyclotomic_relations() {
    for n in [3u32, 4, 5, 6, 8, 9, 12] {
        let f = Field::cyclotomic(n).unwrap();
        let z = f.zeta();
        assert!(z.pow(n).is_one(), "zeta^{n}");
        for d in 1..n {
            if n % d == 0 {
                assert!(!z.pow(d).is_one(), "zeta_{n} has order {d}");
            }
        }
        let sum = (0..n).fold(f.zero(), |acc, k| &acc + &z.pow(k));
        assert!(sum.is_zero());
        assert_eq!(f.roots_of_unity().len() as u32, if n % 2 == 0 { n } else { 2 * n });
    }
}

#[test]
fn prime_field_roots_of_unity() {
    let f = Field::prime(13).unwrap();
    for n in [1u32, 2, 3, 4, 6, 12] {
        let w = f.primitive_root_of_unity(n).unwrap();
        assert!(w.pow(n).is_one());
        assert!((1..n).all(|d| !w.pow(d).is_one()));
    }
    assert!(f.primitive_root_of_unity(5).is_none());
}
