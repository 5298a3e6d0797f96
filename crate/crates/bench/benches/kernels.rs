use std::hint::black_box;

use criterion::{criterion_group, criterion_main, Criterion};

use zs_bench::long_unsplittable;
use zs_core::{enumerate_mzs, index, is_unsplittable_fast, sigma_set, EnumSpec};

fn bench_sigma(c: &mut Criterion) {
    for p in [157u32, 1009] {
        let seq = long_unsplittable(p);
        c.bench_function(&format!("sigma_set/p={p}"), |b| {
            b.iter(|| sigma_set(black_box(&seq)))
        });
    }
}

fn bench_index(c: &mut Criterion) {
    for p in [157u32, 1009] {
        let seq = long_unsplittable(p);
        c.bench_function(&format!("index/p={p}"), |b| {
            b.iter(|| index(black_box(&seq)))
        });
    }
}

fn bench_unsplittable(c: &mut Criterion) {
    let seq = long_unsplittable(211);
    c.bench_function("is_unsplittable_fast/p=211", |b| {
        b.iter(|| is_unsplittable_fast(black_box(&seq)))
    });
}

fn bench_enumerate(c: &mut Criterion) {
    let mut group = c.benchmark_group("enumerate_mzs");
    group.sample_size(10);
    for jobs in [1usize, 4] {
        let spec = EnumSpec::new(13, 6).jobs(jobs);
        group.bench_function(format!("n=13,len=6,jobs={jobs}"), |b| {
            b.iter(|| enumerate_mzs(black_box(&spec)))
        });
    }
    group.finish();
}

criterion_group!(
    benches,
    bench_sigma,
    bench_index,
    bench_unsplittable,
    bench_enumerate
);
criterion_main!(benches);
