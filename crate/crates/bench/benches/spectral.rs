use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use distspec::enumerate::generate_connected;
use distspec::transforms::{complete, cycle, g_nk, path};
use distspec::verify::{verify_min_cut_vertices, VerifyOptions};
use distspec::{canonical_key, spectral_radius, PerronOptions};

fn perron(c: &mut Criterion) {
    let mut group = c.benchmark_group("perron");
    for (name, g) in [
        ("path_12", path(12).unwrap()),
        ("cycle_13", cycle(13).unwrap()),
        ("complete_12", complete(12).unwrap()),
        ("g_nk_9_4", g_nk(9, 4).unwrap()),
    ] {
        group.bench_with_input(BenchmarkId::from_parameter(name), &g, |b, g| {
            b.iter(|| spectral_radius(black_box(g), PerronOptions::default()).unwrap())
        });
    }
    group.finish();
}

fn canonical(c: &mut Criterion) {
    let mut group = c.benchmark_group("canonical_key");
    for (name, g) in [
        ("path_9", path(9).unwrap()),
        ("cycle_9", cycle(9).unwrap()),
        ("complete_9", complete(9).unwrap()),
        ("g_nk_9_3", g_nk(9, 3).unwrap()),
    ] {
        group.bench_with_input(BenchmarkId::from_parameter(name), &g, |b, g| {
            b.iter(|| canonical_key(black_box(g)).unwrap())
        });
    }
    group.finish();
}

fn enumeration(c: &mut Criterion) {
    let mut group = c.benchmark_group("enumerate");
    group.sample_size(10);
    group.bench_function("connected_7", |b| b.iter(|| generate_connected(black_box(7), 9).unwrap()));
    group.bench_function("min_cut_vertices_7_2", |b| {
        let opts = VerifyOptions::default();
        b.iter(|| verify_min_cut_vertices(black_box(7), 2, &opts).unwrap())
    });
    group.finish();
}

criterion_group!(benches, perron, canonical, enumeration);
criterion_main!(benches);
