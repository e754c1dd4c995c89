use criterion::{criterion_group, criterion_main, Criterion};
use gradalg::abgroup::AbGroup;
use gradalg::algebra::GAlgebra;
use gradalg::classify::{construct_simple_galois, enumerate_simple_galois};
use gradalg::galois::{galois_criterion, is_galois_extension};
use gradalg::gf::field_create;
use gradalg::par;
use std::hint::black_box;

fn corpus() -> Vec<GAlgebra> {
    let f = field_create(5, 1).unwrap();
    let g = AbGroup::new(&[4, 4]).unwrap();
    enumerate_simple_galois(&f, &g)
        .unwrap()
        .iter()
        .map(|p| construct_simple_galois(p).unwrap().galg)
        .collect()
}

fn galois_checks(c: &mut Criterion) {
    let algs = corpus();
    let mut group = c.benchmark_group("galois_checks");
    group.sample_size(10);
    group.bench_function("sequential", |b| {
        b.iter(|| black_box(algs.iter().map(|a| is_galois_extension(a).verdict).collect::<Vec<_>>()))
    });
    group.bench_function("parallel", |b| b.iter(|| black_box(par::map(&algs, |a| is_galois_extension(a).verdict))));
    group.finish();
}

fn criterion_checks(c: &mut Criterion) {
    let algs = corpus();
    let mut group = c.benchmark_group("criterion_checks");
    group.sample_size(10);
    group.bench_function("sequential", |b| {
        b.iter(|| black_box(algs.iter().map(|a| galois_criterion(a).unwrap().verdict).collect::<Vec<_>>()))
    });
    group.bench_function("parallel", |b| b.iter(|| black_box(par::map(&algs, |a| galois_criterion(a).unwrap().verdict))));
    group.finish();
}

criterion_group!(benches, galois_checks, criterion_checks);
criterion_main!(benches);
