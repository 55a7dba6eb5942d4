use std::hint::black_box;

use bassforge::artinian::{scholium_sweep, scholium_sweep_seq, valid_specs};
use bassforge::golod::{enumerate_specs, sweep, sweep_seq};
use bassforge::series::{ratio, PowerSeries};
use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

fn golod(c: &mut Criterion) {
    let specs: Vec<_> = (0..=2).flat_map(|d| enumerate_specs(d, 4, 3)).collect();
    let mut g = c.benchmark_group("golod_sweep");
    g.sample_size(20);
    for order in [40, 80] {
        g.bench_with_input(BenchmarkId::new("seq", order), &order, |b, &o| {
            b.iter(|| sweep_seq(black_box(&specs), o))
        });
        g.bench_with_input(BenchmarkId::new("par", order), &order, |b, &o| {
            b.iter(|| sweep(black_box(&specs), o))
        });
    }
    g.finish();
}

fn scholium(c: &mut Criterion) {
    let specs = valid_specs(8, 8);
    let mut g = c.benchmark_group("scholium_sweep");
    g.sample_size(20);
    g.bench_function("seq", |b| b.iter(|| scholium_sweep_seq(black_box(&specs), 40)));
    g.bench_function("par", |b| b.iter(|| scholium_sweep(black_box(&specs), 40)));
    g.finish();
}

fn products(c: &mut Criterion) {
    let mut g = c.benchmark_group("series_product");
    g.sample_size(20);
    for n in [64usize, 256] {
        let a = PowerSeries::new((0..=n).map(|i| ratio(i as i64 + 1, (i % 7) as i64 + 1)).collect());
        let b = PowerSeries::new((0..=n).map(|i| ratio(3 - i as i64, (i % 5) as i64 + 2)).collect());
        g.bench_with_input(BenchmarkId::new("seq", n), &n, |bch, _| bch.iter(|| a.mul_seq(black_box(&b))));
        g.bench_with_input(BenchmarkId::new("par", n), &n, |bch, _| bch.iter(|| a.mul(black_box(&b))));
    }
    g.finish();
}

criterion_group!(benches, golod, scholium, products);
criterion_main!(benches);
