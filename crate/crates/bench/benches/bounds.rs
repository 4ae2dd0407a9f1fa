use criterion::{black_box, criterion_group, criterion_main, Criterion};

use borsuk_core::asymptotic::optimize_c;
use borsuk_core::bound::{search_best_bound, theorem1_bound, LambdaGrid};
use borsuk_core::lifting::{Lambda, Parameters};
use borsuk_core::oracle::{fw_max_family, verify_distance_law};

fn bench_certificate(c: &mut Criterion) {
    let params = Parameters::new(29, 9, 3.0, Lambda::new(-1, 3).unwrap());
    c.bench_function("theorem1_bound 29/9", |b| {
        b.iter(|| theorem1_bound(black_box(&params)).unwrap())
    });
}

fn bench_search(c: &mut Criterion) {
    let grid = LambdaGrid { steps: 64 };
    c.bench_function("search d=406 p=3 (64-step grid)", |b| {
        b.iter(|| search_best_bound(black_box(406), black_box(3.0), &grid).unwrap())
    });
}

fn bench_optimizer(c: &mut Criterion) {
    c.bench_function("optimize_c p=4.5", |b| {
        b.iter(|| optimize_c(black_box(4.5)).unwrap())
    });
}

fn bench_oracles(c: &mut Criterion) {
    let params = Parameters::new(7, 3, 2.0, Lambda::new(-1, 2).unwrap());
    c.bench_function("distance law oracle 7/3", |b| {
        b.iter(|| verify_distance_law(black_box(&params)).unwrap())
    });
    c.bench_function("exact max family 7/3 t=1", |b| {
        b.iter(|| fw_max_family(black_box(7), black_box(3), black_box(1)).unwrap())
    });
}

criterion_group! {
    name = benches;
    config = Criterion::default().sample_size(20);
    targets = bench_certificate, bench_search, bench_optimizer, bench_oracles
}

criterion_main!(benches);
