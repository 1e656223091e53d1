use criterion::{black_box, criterion_group, criterion_main, BenchmarkId, Criterion};
use num::complex::Complex64;

use dunkl::bessel::zeros::zeros_s_with;
use dunkl::series::{truncated_sum_with, SeriesKind};
use dunkl::Execution;

const MODES: [(&str, Execution); 2] = [("sequential", Execution::Sequential), ("parallel", Execution::Parallel)];

fn zero_tables(c: &mut Criterion) {
    let mut group = c.benchmark_group("zeros_s");
    group.sample_size(10);
    for count in [1_000usize, 10_000] {
        for (name, exec) in MODES {
            group.bench_with_input(BenchmarkId::new(name, count), &count, |b, &count| {
                b.iter(|| zeros_s_with(black_box(0.5), count, exec).unwrap())
            });
        }
    }
    group.finish();
}

fn truncated_sums(c: &mut Criterion) {
    let table = zeros_s_with(0.5, 10_000, Execution::default()).unwrap();
    let kinds = [
        ("sigma2", SeriesKind::Sigma(2)),
        ("omega_l1", SeriesKind::OmegaL(1, 2)),
        ("eta_u0", SeriesKind::EtaU(0, Complex64::new(0.3, 0.9))),
    ];
    let mut group = c.benchmark_group("truncated_sum");
    for (label, kind) in kinds {
        for (name, exec) in MODES {
            group.bench_function(BenchmarkId::new(name, label), |b| {
                b.iter(|| truncated_sum_with(kind, 0.5, &table, black_box(10_000), true, exec).unwrap())
            });
        }
    }
    group.finish();
}

criterion_group!(benches, zero_tables, truncated_sums);
criterion_main!(benches);
