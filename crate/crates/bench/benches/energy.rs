use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use exen_bench::{named_graphs, random_graphs};
use exen_core::linalg::eig_symmetric;
use exen_core::{energy_report, evaluate_all, extended_adjacency_matrix, GraphAnalysis, Subject, Subjects, Tolerances};

fn spectra(c: &mut Criterion) {
    let mut group = c.benchmark_group("energy_report");
    for (n, g) in random_graphs(&[8, 16, 32, 64]) {
        group.bench_with_input(BenchmarkId::from_parameter(n), &g, |b, g| b.iter(|| energy_report(black_box(g))));
    }
    group.finish();

    let mut group = c.benchmark_group("extended_eigen");
    for (n, g) in random_graphs(&[16, 64]) {
        let m = extended_adjacency_matrix(&g);
        group.bench_with_input(BenchmarkId::from_parameter(n), &m, |b, m| b.iter(|| eig_symmetric(black_box(m))));
    }
    group.finish();
}

fn catalogue(c: &mut Criterion) {
    let tol = Tolerances::default();
    let mut group = c.benchmark_group("evaluate_all");
    for (name, g) in named_graphs() {
        let co = g.complement();
        let (a, ac) = (GraphAnalysis::of(&g).unwrap(), GraphAnalysis::of(&co).unwrap());
        group.bench_function(name, |b| {
            b.iter(|| {
                let s = Subjects::pair(Subject::from_analysis(&g, &a), Subject::from_analysis(&co, &ac));
                evaluate_all(&s, &tol, |_| true)
            })
        });
    }
    group.finish();
}

criterion_group!(benches, spectra, catalogue);
criterion_main!(benches);
