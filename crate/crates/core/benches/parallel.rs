//! Sequential against data-parallel evaluation of the same workloads.

use std::sync::Arc;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

use goto_core::explorer::{monomial_table, search, PositionPolicy, SearchConfig};
use goto_core::NumericalSemigroup;

fn widths() -> Vec<(&'static str, Option<usize>)> {
    let mut w = vec![("sequential", Some(1))];
    if goto_core::par::parallel_enabled() {
        w.push(("parallel", None));
    }
    w
}

fn bench_search(c: &mut Criterion) {
    let s = Arc::new(NumericalSemigroup::new(&[5, 7]).unwrap());
    let mut group = c.benchmark_group("search <5,7> at most 2 nonzero");
    group.sample_size(10);
    for (name, threads) in widths() {
        let mut config = SearchConfig::new(s.clone());
        config.positions = PositionPolicy::MaxNonzero(2);
        config.threads = threads;
        group.bench_with_input(BenchmarkId::from_parameter(name), &config, |b, config| {
            b.iter(|| search(config).unwrap())
        });
    }
    group.finish();
}

fn bench_table(c: &mut Criterion) {
    let s = NumericalSemigroup::new(&[11, 14, 21]).unwrap();
    let mut group = c.benchmark_group("monomial table <11,14,21> to 400");
    for (name, threads) in widths() {
        group.bench_with_input(
            BenchmarkId::from_parameter(name),
            &threads,
            |b, &threads| b.iter(|| monomial_table(&s, 400, threads).unwrap()),
        );
    }
    group.finish();
}

criterion_group!(benches, bench_search, bench_table);
criterion_main!(benches);
