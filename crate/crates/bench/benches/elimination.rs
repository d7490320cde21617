use std::hint::black_box;

use circsurf::catalog;
use circsurf::implicitize::{build_system, eliminate, implicitize, implicitize_symbolic, QMode};
use circsurf::mesh::{mesh_closed, MeshOptions};
use circsurf::poly::int;
use circsurf::surface::singular_candidates;
use circsurf::CongruenceParam;
use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

fn resultants(c: &mut Criterion) {
    let mut group = c.benchmark_group("resultant");
    let q = QMode::Value(CongruenceParam::from_int(1));
    for curve in [catalog::line(&int(1), &int(2)), catalog::h1(), catalog::h2(), catalog::twisted_cubic(), catalog::ellipse_fig12a()] {
        let sys = build_system(&curve, &q).unwrap();
        group.bench_with_input(BenchmarkId::from_parameter(&curve.name), &sys, |b, sys| b.iter(|| eliminate(black_box(sys)).unwrap()));
    }
    group.finish();
}

fn implicitization(c: &mut Criterion) {
    let mut group = c.benchmark_group("implicitize");
    for qv in [1, 0, -1] {
        let q = CongruenceParam::from_int(qv);
        group.bench_with_input(BenchmarkId::new("twisted-cubic", qv), &q, |b, q| b.iter(|| implicitize(&catalog::twisted_cubic(), black_box(q)).unwrap()));
    }
    group.bench_function("h1-symbolic", |b| b.iter(|| implicitize_symbolic(black_box(&catalog::h1())).unwrap()));
    group.finish();
}

fn geometry(c: &mut Criterion) {
    let mut group = c.benchmark_group("geometry");
    group.sample_size(20);
    let ellipse = catalog::ellipse_fig12a();
    let q = CongruenceParam::from_int(-1);
    group.bench_function("double-points-fig12a", |b| b.iter(|| singular_candidates(black_box(&ellipse), &q).unwrap()));
    let opts = MeshOptions { n_t: 128, n_theta: 64, ..MeshOptions::default() };
    let rose = catalog::hypocycloid_fig7();
    group.bench_function("mesh-fig7-128x64", |b| b.iter(|| mesh_closed(black_box(&rose), &q, &opts).unwrap()));
    group.finish();
}

criterion_group!(benches, resultants, implicitization, geometry);
criterion_main!(benches);
