//! Wall-clock cost of the core measurements: joins and secants over both
//! coefficient fields, a full two-component analysis, and the exact rank
//! kernel they all bottom out in. Sample sizes are small; these numbers
//! guide optimization, they are not CI gates.

use criterion::{black_box, criterion_group, criterion_main, Criterion};

use jembed_bench::{dense_rows, quartic_cone, veronese_tangent_pair};
use jembed_core::classify::analyze;
use jembed_core::field::{PrimeField, Rationals, DEFAULT_PRIME};
use jembed_core::linalg::Matrix;
use jembed_core::terracini::{join_dimension, secant_dimension, GenericityConfig};

fn joins(c: &mut Criterion) {
    let model = veronese_tangent_pair();
    let (y, b) = (&model.components()[1], &model.components()[0]);
    let cfg = GenericityConfig::new(11);
    let prime = PrimeField::new(DEFAULT_PRIME).unwrap();

    let mut g = c.benchmark_group("join");
    g.sample_size(10);
    g.bench_function("veronese-tangent-plane/rational", |bench| {
        bench.iter(|| join_dimension(&Rationals, black_box(y), black_box(b), &cfg).unwrap())
    });
    g.bench_function("veronese-tangent-plane/prime", |bench| {
        bench.iter(|| join_dimension(&prime, black_box(y), black_box(b), &cfg).unwrap())
    });
    g.finish();
}

fn secants(c: &mut Criterion) {
    let cone = quartic_cone();
    let cfg = GenericityConfig::new(11);
    let prime = PrimeField::new(DEFAULT_PRIME).unwrap();

    let mut g = c.benchmark_group("secant");
    g.sample_size(10);
    g.bench_function("twisted-cubic-cone/prime", |bench| {
        bench.iter(|| secant_dimension(&prime, black_box(&cone), &cfg).unwrap())
    });
    g.finish();
}

fn full_analysis(c: &mut Criterion) {
    let model = veronese_tangent_pair();
    let cfg = GenericityConfig::new(11);
    let prime = PrimeField::new(DEFAULT_PRIME).unwrap();

    let mut g = c.benchmark_group("analyze");
    g.sample_size(10);
    g.bench_function("veronese-tangent-pair/prime", |bench| {
        bench.iter(|| analyze(&prime, black_box(&model), &cfg).unwrap())
    });
    g.finish();
}

fn rank_kernel(c: &mut Criterion) {
    let rows = dense_rows(24, 30, 3);
    let prime = PrimeField::new(DEFAULT_PRIME).unwrap();

    let mut g = c.benchmark_group("rank-24x30");
    g.bench_function("rational", |bench| {
        bench.iter(|| {
            Matrix::from_i64_rows(Rationals, black_box(&rows))
                .unwrap()
                .rank()
        })
    });
    g.bench_function("prime", |bench| {
        bench.iter(|| {
            Matrix::from_i64_rows(prime.clone(), black_box(&rows))
                .unwrap()
                .rank()
        })
    });
    g.finish();
}

criterion_group!(benches, joins, secants, full_analysis, rank_kernel);
criterion_main!(benches);
