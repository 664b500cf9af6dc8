use criterion::{criterion_group, criterion_main, Criterion};
use std::hint::black_box;

use kleinbraid::sweep::{self, FixtureFamily, SweepCell};

fn bench_cells() -> Vec<SweepCell> {
    let xs: Vec<i64> = (-6..=6).collect();
    let ys: Vec<i64> = (-6..=6).collect();
    let zs: Vec<i64> = (-9..=9).filter(|z| z % 2 != 0).collect();
    let ls: Vec<i64> = (-4..=4).collect();
    let mut cells = sweep::grid(FixtureFamily::B0Even, &xs, &ys, &zs, &ls).unwrap();
    cells.extend(sweep::grid(FixtureFamily::B0Odd, &xs, &ys, &zs, &ls).unwrap());
    cells
}

fn bench_sweep(c: &mut Criterion) {
    let cells = bench_cells();
    let mut group = c.benchmark_group("fixture_sweep");
    group.sample_size(10);

    group.bench_function("sequential", |b| {
        b.iter(|| sweep::evaluate_sequential(black_box(&cells)).unwrap())
    });

    #[cfg(feature = "parallel")]
    group.bench_function("parallel", |b| {
        b.iter(|| sweep::evaluate(black_box(&cells)).unwrap())
    });

    group.finish();
}

criterion_group!(benches, bench_sweep);
criterion_main!(benches);
