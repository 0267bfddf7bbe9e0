use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use tdc_core::families::{build_g4m, build_g4m2};
use tdc_core::search::canonical_graph6;
use tdc_core::{gamma_t, graph6, is_k_gamma_t_critical};

fn bench_gamma_t(c: &mut Criterion) {
    let mut group = c.benchmark_group("gamma_t");
    for m in [3, 6, 10] {
        let g = build_g4m2(m).unwrap().graph;
        group.bench_with_input(BenchmarkId::new("g4m2", m), &g, |b, g| {
            b.iter(|| gamma_t(black_box(g)))
        });
    }
    group.finish();
}

fn bench_criticality(c: &mut Criterion) {
    let mut group = c.benchmark_group("criticality");
    for m in [3, 6] {
        let g = build_g4m(m).unwrap().graph;
        group.bench_with_input(BenchmarkId::new("g4m", m), &g, |b, g| {
            b.iter(|| is_k_gamma_t_critical(black_box(g), 3).unwrap())
        });
    }
    group.finish();
}

fn bench_canonical(c: &mut Criterion) {
    // order-10 graph with a small automorphism group
    let g = graph6::decode("IheA@GUAo").unwrap();
    c.bench_function("canonical_graph6/order10", |b| {
        b.iter(|| canonical_graph6(black_box(&g)).unwrap())
    });
}

criterion_group!(benches, bench_gamma_t, bench_criticality, bench_canonical);
criterion_main!(benches);
