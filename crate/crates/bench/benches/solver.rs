use criterion::{criterion_group, criterion_main, BatchSize, BenchmarkId, Criterion};

use dcut_bench::{bridged, sparse_random, BRIDGED_Q};
use dcut_core::decomposition::construct;
use dcut_core::{brute_force_min_dcut, solve, DpOptions, DpRun, MinBetaMode, SolveOptions};

const K: usize = 3;
const D: usize = 1;

fn dp_phase(c: &mut Criterion) {
    let mut group = c.benchmark_group("dp_bridged");
    for q in BRIDGED_Q {
        let g = bridged(q);
        let td = construct(&g, K).unwrap();
        for (name, mode) in [("enumerate", MinBetaMode::Enumerate), ("colorcode", MinBetaMode::ColorCode)] {
            let opts = DpOptions { min_beta: mode, ..DpOptions::default() };
            group.bench_with_input(BenchmarkId::new(name, 2 * q), &td, |b, td| {
                b.iter(|| DpRun::run(&g, td, K, D, &opts).unwrap().root_value());
            });
        }
    }
    group.finish();
}

fn decomposition(c: &mut Criterion) {
    let mut group = c.benchmark_group("construct");
    for n in [8, 12, 16] {
        let g = sparse_random(n, 7);
        group.bench_with_input(BenchmarkId::from_parameter(n), &g, |b, g| b.iter(|| construct(g, K).unwrap()));
    }
    group.finish();
}

fn end_to_end(c: &mut Criterion) {
    let mut group = c.benchmark_group("solve_vs_oracle");
    for n in [10, 14, 18] {
        let g = sparse_random(n, 11);
        group.bench_with_input(BenchmarkId::new("solve", n), &g, |b, g| {
            b.iter_batched(SolveOptions::default, |opts| solve(g, K, D, &opts).unwrap().answer, BatchSize::SmallInput);
        });
        group.bench_with_input(BenchmarkId::new("oracle", n), &g, |b, g| {
            b.iter(|| brute_force_min_dcut(g, D).unwrap().min_dcut_size);
        });
    }
    group.finish();
}

criterion_group!(benches, dp_phase, decomposition, end_to_end);
criterion_main!(benches);
