use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use std::hint::black_box;

use zeckgame_bench::lgs_position;
use zeckgame_core::{
    analysis::simulate_random,
    legal_moves, lgs_length,
    solver::{solve_n, SolveOptions},
    strategy::{playout_length, playout_rng},
};

fn engine(c: &mut Criterion) {
    let s = lgs_position(500, 400);
    c.bench_function("legal_moves/k~250", |b| b.iter(|| legal_moves(black_box(&s))));
}

fn lgs(c: &mut Criterion) {
    let mut group = c.benchmark_group("lgs_length");
    for n in [500u64, 5000] {
        group.bench_with_input(BenchmarkId::from_parameter(n), &n, |b, &n| {
            b.iter(|| lgs_length(black_box(n)).unwrap())
        });
    }
    group.finish();
}

fn random_play(c: &mut Criterion) {
    c.bench_function("random_playout/n=150", |b| {
        let mut stream = 0;
        b.iter(|| {
            stream += 1;
            playout_length(150, &mut playout_rng(42, stream)).unwrap()
        })
    });
    let mut group = c.benchmark_group("simulate");
    group.sample_size(10);
    group.bench_function("n=150/trials=1000", |b| {
        b.iter(|| simulate_random(150, 1000, 42).unwrap())
    });
    group.finish();
}

fn solver(c: &mut Criterion) {
    let mut group = c.benchmark_group("solve_n");
    group.sample_size(10);
    for n in [12u64, 16] {
        group.bench_with_input(BenchmarkId::from_parameter(n), &n, |b, &n| {
            b.iter(|| solve_n(n, &SolveOptions::default()).unwrap())
        });
    }
    group.finish();
}

criterion_group!(benches, engine, lgs, random_play, solver);
criterion_main!(benches);
