use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use diet_core::{brute_orbit_count, build_diet, count_orbits, CompositionStream};
use std::hint::black_box;

fn sweep(c: &mut Criterion) {
    let mut group = c.benchmark_group("all compositions of n");
    for n in [10u64, 14] {
        let all: Vec<_> = CompositionStream::of_sum(n).collect();
        group.bench_with_input(BenchmarkId::new("recursion", n), &all, |b, all| {
            b.iter(|| all.iter().map(|c| count_orbits(black_box(c))).sum::<u64>())
        });
        group.bench_with_input(BenchmarkId::new("brute force", n), &all, |b, all| {
            b.iter(|| {
                all.iter()
                    .map(|c| brute_orbit_count(black_box(c)))
                    .sum::<u64>()
            })
        });
    }
    group.finish();
}

fn long_parts(c: &mut Criterion) {
    // Subtractive runs: the recursion takes ~n/λ steps, the permutation n cells.
    let wide = "3,5000,4,2000,7".parse().unwrap();
    c.bench_function("count_orbits 3,5000,4,2000,7", |b| {
        b.iter(|| count_orbits(black_box(&wide)))
    });
    c.bench_function("build_diet 3,5000,4,2000,7", |b| {
        b.iter(|| build_diet(black_box(&wide)).orbit_count())
    });
}

criterion_group!(benches, sweep, long_parts);
criterion_main!(benches);
