//! Parallel vs sequential scan benchmarks.

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

use tfrunner_core::gabor::{gram_matrix, FunctionModel, PointSet};
use tfrunner_core::runner::{runner_margin, RunnerInstance};
use tfrunner_core::scan::{self, Grid};

fn bench_margin_sup(c: &mut Criterion) {
    let inst = RunnerInstance::new(vec![1.0, 2.0, 3.0], vec![0.13, 0.57, 0.91]).unwrap();
    let mut group = c.benchmark_group("margin_sup_scan");
    for &count in &[100_000u64, 1_000_000] {
        let grid = Grid::new(0.0, 1.0 / count as f64);
        group.bench_with_input(BenchmarkId::new("parallel", count), &count, |b, &n| {
            b.iter(|| scan::argmax_par(grid, n, |t| runner_margin(&inst, t)))
        });
        group.bench_with_input(BenchmarkId::new("sequential", count), &count, |b, &n| {
            b.iter(|| scan::argmax_seq(grid, n, |t| runner_margin(&inst, t)))
        });
    }
    group.finish();
}

fn bench_first_hit(c: &mut Criterion) {
    let inst = RunnerInstance::new(vec![1.0, 2.0, 4.0], vec![0.0, 0.0, 0.0]).unwrap();
    let grid = Grid::new(0.0, 1e-6);
    let mut group = c.benchmark_group("lonely_first_hit");
    group.bench_function("parallel", |b| {
        b.iter(|| scan::first_hit_par(grid, 1 << 20, |t| runner_margin(&inst, t) >= 0.3))
    });
    group.bench_function("sequential", |b| {
        b.iter(|| scan::first_hit_seq(grid, 1 << 20, |t| runner_margin(&inst, t) >= 0.3))
    });
    group.finish();
}

fn bench_gram(c: &mut Criterion) {
    let f = FunctionModel::TwoPlusCos;
    let a = 0.3;
    let lam = PointSet::from_floats(&[
        (0.0, 0.0),
        (0.0, -1.0),
        (0.0, 1.0),
        (a, 0.0),
        (a, -1.0),
        (a, 1.0),
    ])
    .unwrap();
    let mut group = c.benchmark_group("gram_matrix_6pt");
    group.sample_size(20);
    group.bench_function("assemble_16k", |b| {
        b.iter(|| gram_matrix(&f, &lam, 16.0, 1 << 14).unwrap())
    });
    group.finish();
}

criterion_group!(benches, bench_margin_sup, bench_first_hit, bench_gram);
criterion_main!(benches);
