use std::hint::black_box;

use criterion::{criterion_group, criterion_main, Criterion};
use repst::bounds::bound_sweep;
use repst::deligne::{dim_x, frob_coefficient, omega_m_eigenvalue, pieri_h0};
use repst::groupalg::{gamma_ratio_table, stirling_hilbert_coeff};
use repst::snoracle::mn_character;
use repst::{CycleType, Partition};

fn deligne(c: &mut Criterion) {
    let lambda: Partition = "3,2,1".parse().unwrap();
    let rho: CycleType = "1,1".parse().unwrap();
    c.bench_function("dim_x (3,2,1)", |b| b.iter(|| dim_x(black_box(&lambda))));
    c.bench_function("pieri (3,2,1)", |b| b.iter(|| pieri_h0(black_box(&lambda))));
    c.bench_function("frob (3,2,1) [1,1]", |b| b.iter(|| frob_coefficient(black_box(&lambda), &rho)));
    c.bench_function("omega_m (3,2,1) [1,1]", |b| b.iter(|| omega_m_eigenvalue(&rho, black_box(&lambda))));
    let padded = lambda.pad(12).unwrap();
    c.bench_function("character (6,3,2,1) [1,1]", |b| b.iter(|| mn_character(black_box(&padded), &rho)));
}

fn group_algebra(c: &mut Criterion) {
    c.bench_function("stirling m=6", |b| b.iter(|| stirling_hilbert_coeff(black_box(6))));
    c.bench_function("gamma table m=6", |b| b.iter(|| gamma_ratio_table(black_box(6))));
}

fn bounds(c: &mut Criterion) {
    let mut g = c.benchmark_group("bounds");
    g.sample_size(10);
    g.bench_function("bound sweep n=18", |b| b.iter(|| bound_sweep(black_box(18))));
    g.finish();
}

criterion_group!(benches, deligne, group_algebra, bounds);
criterion_main!(benches);
