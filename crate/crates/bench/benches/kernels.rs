//! Criterion benchmarks of the numerical kernels.

use criterion::{criterion_group, criterion_main, Criterion};
use fpp_bench::Kernels;
use fpp_core::census::SearchSpace;
use fpp_core::lvalues::Fold;
use std::hint::black_box;

fn kernels(c: &mut Criterion) {
    let k = Kernels::new().expect("bundled data");
    c.bench_function("euler_product/C35.ell/s=2/P=1e5", |b| b.iter(|| black_box(k.euler(Fold::Sequential))));
    c.bench_function("ddf/C35.ell/p=1000003", |b| b.iter(|| black_box(k.ddf("C35").unwrap())));
    c.bench_function("local_degrees/C2.ell/P=1e4", |b| b.iter(|| black_box(k.local_degrees("C2", 10_000).unwrap())));
    c.bench_function("bounds/phi2(7,9)", |b| b.iter(|| black_box(k.phi2(7, 9).unwrap())));
    let mut g = c.benchmark_group("slow");
    g.sample_size(10);
    g.bench_function("bounds/frakN(10)", |b| b.iter(|| black_box(k.frak_n(10).unwrap())));
    g.bench_function("search/C2/all kinds", |b| b.iter(|| black_box(k.search("C2", SearchSpace::AllKinds).unwrap())));
    g.finish();
}

criterion_group!(benches, kernels);
criterion_main!(benches);
