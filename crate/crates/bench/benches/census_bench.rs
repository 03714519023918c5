//! Census engine throughput on the three 1500-node generator graphs.

use census_bench::benchmark_trio;
use census_core::{bfs_bmatrix, bfs_census, serialize_census};
use criterion::{criterion_group, criterion_main, Criterion};
use std::hint::black_box;

fn bench_bfs_census(c: &mut Criterion) {
    let mut group = c.benchmark_group("bfs_census");
    group.sample_size(20);
    for (name, g) in benchmark_trio() {
        group.bench_function(name, |b| b.iter(|| bfs_census(black_box(&g))));
    }
    group.finish();
}

fn bench_shell_matrix(c: &mut Criterion) {
    let mut group = c.benchmark_group("bfs_bmatrix");
    group.sample_size(20);
    for (name, g) in benchmark_trio() {
        group.bench_function(name, |b| b.iter(|| bfs_bmatrix(black_box(&g))));
    }
    group.finish();
}

fn bench_serialization(c: &mut Criterion) {
    let mut group = c.benchmark_group("serialize_census");
    group.sample_size(50);
    for (name, g) in benchmark_trio() {
        let ct = bfs_census(&g);
        group.bench_function(name, |b| {
            b.iter(|| serialize_census(black_box(&ct.stub_census), true))
        });
    }
    group.finish();
}

criterion_group!(
    benches,
    bench_bfs_census,
    bench_shell_matrix,
    bench_serialization
);
criterion_main!(benches);
