use criterion::{criterion_group, criterion_main, Criterion};
use exen_core::oracle::{run_sweep, run_sweep_with, SweepConfig, SweepOptions};

fn exhaustive(c: &mut Criterion) {
    let mut group = c.benchmark_group("exhaustive_sweep");
    group.sample_size(10);
    let cfg = SweepConfig::exhaustive(1, 5);
    group.bench_function("n<=5 pairs", |b| b.iter(|| run_sweep(&cfg).unwrap()));
    let single = SweepOptions { threads: Some(1), progress: None, timing: false };
    group.bench_function("n<=5 pairs, 1 thread", |b| b.iter(|| run_sweep_with(&cfg, &single).unwrap()));
    group.finish();
}

fn random(c: &mut Criterion) {
    let mut group = c.benchmark_group("random_sweep");
    group.sample_size(10);
    let cfg = SweepConfig::random((20, 20), vec![0.2, 0.5, 0.8], 10, 7);
    group.bench_function("G(20,p) x30", |b| b.iter(|| run_sweep(&cfg).unwrap()));
    group.finish();
}

criterion_group!(benches, exhaustive, random);
criterion_main!(benches);
