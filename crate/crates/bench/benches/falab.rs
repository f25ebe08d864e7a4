use criterion::{black_box, criterion_group, criterion_main, BenchmarkId, Criterion};
use falab::constructors::{group_hopf, irreducible_bundle, matrix_algebra, sweedler_h4, symmetric_group};
use falab::fusion::build_g0;
use falab::math::char_poly;
use falab::{Field, FrobeniusStructure, Matrix};

fn exact_math(c: &mut Criterion) {
    let mut g = c.benchmark_group("char_poly");
    for field in [Field::rationals(), Field::prime(101).unwrap(), Field::cyclotomic(5).unwrap()] {
        for n in [4usize, 8, 12] {
            let rows: Vec<Vec<_>> = (0..n).map(|i| (0..n).map(|j| field.from_int(((i * 7 + j * 3) % 11) as i64 - 5)).collect()).collect();
            let m = Matrix::from_rows(&field, rows).unwrap();
            g.bench_with_input(BenchmarkId::new(field.to_string(), n), &m, |b, m| b.iter(|| char_poly(black_box(m)).unwrap()));
        }
    }
    g.finish();
}

fn frobenius(c: &mut Criterion) {
    let q = Field::rationals();
    c.bench_function("matrix_algebra M4 with trace form", |b| b.iter(|| matrix_algebra(black_box(4), &q).unwrap()));
    let s4 = group_hopf(&symmetric_group(4).unwrap(), &q).unwrap();
    c.bench_function("QS4 form and Casimir ideal", |b| {
        b.iter(|| {
            let fs = FrobeniusStructure::new(s4.hopf.algebra(), s4.pair.lambda.clone()).unwrap();
            fs.is_separable().separable
        })
    });
}

fn hopf(c: &mut Criterion) {
    let h4 = sweedler_h4(&Field::rationals()).unwrap();
    c.bench_function("H4 symmetry suite", |b| b.iter(|| h4.symmetry_suite().unwrap()));
    let s3 = group_hopf(&symmetric_group(3).unwrap(), &Field::rationals()).unwrap();
    c.bench_function("QS3 integrals", |b| b.iter(|| s3.hopf.integrals().unwrap()));
}

fn fusion(c: &mut Criterion) {
    let q = Field::rationals();
    let mut g = c.benchmark_group("fusion");
    g.sample_size(10);
    for name in ["S3", "S4"] {
        let b = irreducible_bundle(name, &q).unwrap();
        g.bench_function(BenchmarkId::new("build_g0", name), |bn| {
            bn.iter(|| build_g0(&b.group.hopf, &b.irreducibles, b.labels.clone(), None).unwrap())
        });
        let fr = build_g0(&b.group.hopf, &b.irreducibles, b.labels.clone(), None).unwrap();
        g.bench_function(BenchmarkId::new("adjoint_spectrum", name), |bn| bn.iter(|| fr.adjoint_spectrum().unwrap()));
        g.bench_function(BenchmarkId::new("ss_locus", name), |bn| bn.iter(|| fr.ss_locus_mod_p().unwrap()));
    }
    g.finish();
}

criterion_group!(benches, exact_math, frobenius, hopf, fusion);
criterion_main!(benches);
