use std::hint::black_box;

use ancell_bench::plane_points;
use ancell_core::lattice::closest_point_a;
use ancell_core::section::section_equivalence_check;
use ancell_core::voronoi::{k_faces, locate, voronoi_vertices};
use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

fn closest(c: &mut Criterion) {
    let mut g = c.benchmark_group("closest_point");
    for n in [3, 8, 24] {
        let pts = plane_points(n, 64, 7);
        g.bench_with_input(BenchmarkId::from_parameter(n), &pts, |b, pts| {
            b.iter(|| {
                for p in pts {
                    black_box(closest_point_a(n, p).unwrap());
                }
            })
        });
    }
    g.finish();
}

fn locate_points(c: &mut Criterion) {
    let mut g = c.benchmark_group("locate");
    for n in [3, 8] {
        let pts = plane_points(n, 64, 11);
        g.bench_with_input(BenchmarkId::from_parameter(n), &pts, |b, pts| {
            b.iter(|| {
                for p in pts {
                    black_box(locate(n, p).unwrap());
                }
            })
        });
    }
    g.finish();
}

fn vertices(c: &mut Criterion) {
    let mut g = c.benchmark_group("voronoi_vertices");
    for n in [4, 8, 12] {
        g.bench_function(BenchmarkId::from_parameter(n), |b| b.iter(|| voronoi_vertices(black_box(n)).unwrap()));
    }
    g.finish();
}

fn faces(c: &mut Criterion) {
    let mut g = c.benchmark_group("k_faces");
    g.sample_size(20);
    for (n, k) in [(4, 2), (6, 3)] {
        g.bench_function(format!("n{n}_k{k}"), |b| b.iter(|| k_faces(black_box(n), k).unwrap()));
    }
    g.finish();
}

fn section(c: &mut Criterion) {
    let mut g = c.benchmark_group("section");
    g.sample_size(10);
    g.bench_function("n3", |b| b.iter(|| section_equivalence_check(black_box(3)).unwrap()));
    g.finish();
}

criterion_group!(benches, closest, locate_points, vertices, faces, section);
criterion_main!(benches);
