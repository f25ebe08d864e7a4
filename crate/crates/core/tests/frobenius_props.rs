use std::sync::Arc;

use falab::constructors::{dual_group_hopf, group_hopf, irreducible_bundle, matrix_algebra, sweedler_h4, symmetric_group};
use falab::frobenius::{integral_space, Side};
use falab::hopf::canonical;
use falab::rep::analyze_module;
use falab::{Algebra, Element, Field, FrobeniusStructure, Scalar};
use proptest::prelude::*;

fn dual_numbers(f: &Field) -> Arc<Algebra> {
    Algebra::from_triples(
        f,
        2,
        vec!["1".into(), "e".into()],
        vec![f.one(), f.zero()],
        vec![(0, 0, 0, f.one()), (0, 1, 1, f.one()), (1, 0, 1, f.one())],
    )
    .unwrap()
}

/// Frobenius fixtures: (name, structure).
fn fixtures() -> Vec<(String, FrobeniusStructure)> {
    let q = Field::rationals();
    let mut out = Vec::new();
    for n in 1..=3 {
        out.push((format!("M{n}(Q)"), matrix_algebra(n, &q).unwrap().1));
    }
    let s3 = group_hopf(&symmetric_group(3).unwrap(), &q).unwrap();
    out.push(("QS3".into(), FrobeniusStructure::new(s3.hopf.algebra(), s3.pair.lambda.clone()).unwrap()));
    let f5 = Field::prime(5).unwrap();
    let s3p = group_hopf(&symmetric_group(3).unwrap(), &f5).unwrap();
    out.push(("F5S3".into(), s3p.hopf.frobenius_from_integrals().unwrap().frobenius));
    out.push(("H4".into(), sweedler_h4(&q).unwrap().frobenius_from_integrals().unwrap().frobenius));
    let d = dual_group_hopf(&symmetric_group(3).unwrap(), &q).unwrap();
    out.push(("(QS3)*".into(), d.hopf.frobenius_from_integrals().unwrap().frobenius));
    let a = dual_numbers(&q);
    out.push(("Q[x]/x^2".into(), FrobeniusStructure::new(&a, vec![q.zero(), q.one()]).unwrap()));
    let c3 = irreducible_bundle("C3", &Field::cyclotomic(3).unwrap()).unwrap();
    out.push(("Q(z3)C3".into(), c3.group.hopf.frobenius_from_integrals().unwrap().frobenius));
    out
}

fn element(a: &Arc<Algebra>, seed: &[i64]) -> Element {
    let f = a.field();
    a.element((0..a.dim()).map(|i| f.from_int(seed[i % seed.len()] + i as i64 % 3)).collect()).unwrap()
}

#[test]
fn dual_bases_hold_on_every_fixture() {
    let fx = fixtures();
    assert!(fx.len() >= 6);
    for (name, fs) in &fx {
        assert_eq!(fs.check_dual_bases(), Ok(()), "{name}");
        assert!(fs.nakayama_is_automorphism(), "{name}");
        let a = fs.algebra();
        // a = sum beta(a, y_i) x_i and its mirror a = sum beta(x_i, a) y_i
        for k in 0..a.dim() {
            let e = a.basis_element(k);
            let mut left = a.zero_element();
            let mut mirror = a.zero_element();
            for i in 0..a.dim() {
                left = &left + &fs.x(i).scale(&fs.beta(e.coeffs(), fs.y(i).coeffs()));
                mirror = &mirror + &fs.y(i).scale(&fs.beta(fs.x(i).coeffs(), e.coeffs()));
            }
            assert_eq!(left, e, "{name}: expansion of e{k}");
            assert_eq!(mirror, e, "{name}: mirror expansion of e{k}");
        }
    }
}

#[test]
fn hopf_dual_bases_agree_with_gram_inverse() {
    let q = Field::rationals();
    let hopfs = vec![
        group_hopf(&symmetric_group(3).unwrap(), &q).unwrap().hopf,
        sweedler_h4(&q).unwrap(),
        dual_group_hopf(&symmetric_group(3).unwrap(), &q).unwrap().hopf,
        sweedler_h4(&Field::prime(7).unwrap()).unwrap(),
    ];
    for h in hopfs {
        let hf = h.frobenius_from_integrals().unwrap();
        assert!(hf.dual_bases_agree && hf.orthogonal);
        assert!(h.antipode().det().map(|d| !d.is_zero()).unwrap());
        assert!(hf.integrals.left_is_antipode_image);
    }
}

#[test]
fn casimir_matches_lemma_on_matrix_algebras() {
    let q = Field::rationals();
    for n in 1..=4 {
        let (a, fs) = matrix_algebra(n, &q).unwrap();
        assert_eq!(fs.casimir_element(), a.unit().scale(&q.from_int(n as i64)));
        assert!(fs.is_separable().separable);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn regular_matrices_are_homomorphisms(fi in 0usize..9, s1 in prop::collection::vec(-3i64..4, 1..5), s2 in prop::collection::vec(-3i64..4, 1..5)) {
        let fx = fixtures();
        let a = fx[fi].1.algebra();
        let x = element(a, &s1);
        let y = element(a, &s2);
        let xy = &x * &y;
        prop_assert_eq!(xy.left_regular_matrix(), &x.left_regular_matrix() * &y.left_regular_matrix());
        prop_assert_eq!(xy.right_regular_matrix(), &y.right_regular_matrix() * &x.right_regular_matrix());
        prop_assert_eq!(xy.norm(), &x.norm() * &y.norm());
    }

    #[test]
    fn nakayama_twists_lambda(fi in 0usize..9, s1 in prop::collection::vec(-3i64..4, 1..5), s2 in prop::collection::vec(-3i64..4, 1..5)) {
        // lambda(ab) = lambda(b alpha(a))
        let fx = fixtures();
        let fs = &fx[fi].1;
        let a = fs.algebra();
        let x = element(a, &s1);
        let y = element(a, &s2);
        let ax = a.element(fs.nakayama().mul_vec(x.coeffs())).unwrap();
        prop_assert_eq!((&x * &y).eval(fs.lambda()), (&y * &ax).eval(fs.lambda()));
    }

    #[test]
    fn rescaling_lambda_preserves_verdicts(fi in 0usize..9, num in 1i64..7, den in 1i64..7, neg in any::<bool>()) {
        let fx = fixtures();
        let fs = &fx[fi].1;
        let a = fs.algebra();
        let f = a.field();
        let c = f.from_int(if neg { -num } else { num }).checked_div(&f.from_int(den));
        prop_assume!(c.as_ref().is_ok_and(|c| !c.is_zero()));
        let c = c.unwrap();
        let scaled: Vec<Scalar> = fs.lambda().iter().map(|l| l * &c).collect();
        let gs = FrobeniusStructure::new(a, scaled).unwrap();
        prop_assert_eq!(gs.is_separable().separable, fs.is_separable().separable);
        prop_assert_eq!(gs.casimir_ideal_basis().len(), fs.casimir_ideal_basis().len());
        prop_assert_eq!(gs.is_symmetric(), fs.is_symmetric());
        let u = fs.change_of_form_unit(&gs).unwrap();
        prop_assert!(u.is_central());
    }
}

#[test]
fn integral_lines_are_form_independent() {
    let q = Field::rationals();
    let h = group_hopf(&symmetric_group(3).unwrap(), &q).unwrap();
    let a = h.hopf.algebra();
    let r = integral_space(a, h.hopf.counit(), Side::Right);
    let l = integral_space(a, h.hopf.counit(), Side::Left);
    assert_eq!((r.len(), l.len()), (1, 1));
    let fs = FrobeniusStructure::new(a, h.pair.lambda.clone()).unwrap();
    let gs = FrobeniusStructure::new(a, h.pair.lambda.iter().map(|x| x * &q.from_int(-3)).collect()).unwrap();
    let aug_f = fs.augmentation(h.hopf.counit()).unwrap();
    let aug_g = gs.augmentation(h.hopf.counit()).unwrap();
    assert_eq!(canonical(&aug_f.right_integral), canonical(&aug_g.right_integral));
    assert_eq!(canonical(&aug_f.right_integral), canonical(&r[0]));
    assert_eq!(aug_f.dim_eps.is_zero(), aug_g.dim_eps.is_zero());
}

#[test]
fn idempotents_survive_rescaling() {
    let q = Field::rationals();
    let b = irreducible_bundle("S3", &q).unwrap();
    let a = b.group.hopf.algebra();
    let fs = FrobeniusStructure::new(a, b.group.pair.lambda.clone()).unwrap();
    for c in [2i64, -5, 7] {
        let gs = FrobeniusStructure::new(a, b.group.pair.lambda.iter().map(|x| x * &q.from_int(c)).collect()).unwrap();
        for m in &b.irreducibles {
            let e1 = analyze_module(&fs, m).unwrap();
            let e2 = analyze_module(&gs, m).unwrap();
            assert_eq!(e1.idempotent().unwrap(), e2.idempotent().unwrap());
            // index scales by c^-1
            let ratio = e1.index().unwrap().checked_div(e2.index().unwrap()).unwrap();
            assert_eq!(ratio, q.from_int(c));
        }
    }
}
