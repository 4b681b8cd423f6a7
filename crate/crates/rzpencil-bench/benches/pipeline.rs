//! Benchmarks for the hot paths: symbolic determinants, Sturm root
//! profiles, generator construction, grid identity proofs, and exact
//! membership tests.

use criterion::{criterion_group, criterion_main, Criterion};
use rzpencil::clifford::{self, Variant};
use rzpencil::interface::ball_poly;
use rzpencil::pencil::arrowhead_pencil;
use rzpencil::polynomial::UniPoly;
use rzpencil::realzero::{self, quadratic_form};
use rzpencil::scalar::Coeff;
use std::hint::black_box;

fn bench_det_poly(c: &mut Criterion) {
    let arrow = arrowhead_pencil(6);
    c.bench_function("det_poly/arrowhead_n6", |b| {
        b.iter(|| black_box(&arrow).det_poly().unwrap())
    });
    let q = quadratic_form(&ball_poly(5)).unwrap();
    let bw = clifford::quadratic_pencil(&q, Variant::Standard).unwrap();
    c.bench_function("det_poly/clifford_4x4_n5", |b| {
        b.iter(|| black_box(&bw).det_poly().unwrap())
    });
}

fn bench_sturm(c: &mut Criterion) {
    // dense degree-8 rational polynomial with mixed real/complex roots
    let coeffs: Vec<Coeff> = [3, -5, 2, 7, -1, 0, 4, -2, 6]
        .iter()
        .map(|&n| Coeff::from_rat(n, 3))
        .collect();
    let u = UniPoly::new(coeffs);
    c.bench_function("real_roots/degree8_exact", |b| {
        b.iter(|| realzero::real_roots(black_box(&u), 8).unwrap())
    });
}

fn bench_brauer_weyl(c: &mut Criterion) {
    c.bench_function("brauer_weyl/n10", |b| {
        b.iter(|| clifford::brauer_weyl(black_box(10), Variant::Standard).unwrap())
    });
}

fn bench_grid_verify(c: &mut Criterion) {
    let p4 = ball_poly(4);
    let q = quadratic_form(&p4).unwrap();
    let pencil = clifford::quadratic_pencil(&q, Variant::Standard).unwrap();
    c.bench_function("verify_identity/p4_grid625", |b| {
        b.iter(|| {
            let out = black_box(&pencil)
                .verify_identity(&p4, 2, 8, rzpencil::DEFAULT_SEED)
                .unwrap();
            assert!(out.passed());
            out
        })
    });
}

fn bench_membership(c: &mut Criterion) {
    let arrow = arrowhead_pencil(6);
    let point: Vec<Coeff> = (0..6).map(|j| Coeff::from_rat(1, 3 + j as i64)).collect();
    c.bench_function("membership/arrowhead_n6_exact", |b| {
        b.iter(|| black_box(&arrow).membership(black_box(&point)).unwrap())
    });
}

criterion_group!(
    benches,
    bench_det_poly,
    bench_sturm,
    bench_brauer_weyl,
    bench_grid_verify,
    bench_membership
);
criterion_main!(benches);
