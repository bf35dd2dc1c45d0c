//! Throughput of the data-parallel kernels, labeled by execution mode.
//!
//! Run twice to compare modes:
//!   cargo bench -p antoine                          (rayon)
//!   cargo bench -p antoine --no-default-features    (sequential)

use criterion::{criterion_group, criterion_main, Criterion};
use std::hint::black_box;

use antoine::execution_mode;
use antoine::geom::{Plane3, Point3};
use antoine::necklace::{build_necklace, make_standard_torus, thin_to_tubes, verify_chain};
use antoine::shadow::{sample_planes, union_shadow, RasterMode, ShadowItem};

fn seed_sequence() -> antoine::necklace::BuildOutcome {
    let seed = make_standard_torus(&Plane3::xy(), Point3::ORIGIN, 1.0, 0.2).unwrap();
    build_necklace(&seed, &[], 2).unwrap()
}

fn bench_union_shadow(c: &mut Criterion) {
    let out = seed_sequence();
    let items: Vec<ShadowItem> =
        out.sequence.stage(2).tori.iter().map(|t| ShadowItem::Torus(*t)).collect();
    let plane = &sample_planes(3, 1, Point3::ORIGIN)[0];
    let pixel = out.sequence.stage(2).min_minor_radius() / 4.0;
    c.bench_function(&format!("union_shadow/{}", execution_mode()), |b| {
        b.iter(|| {
            let raster =
                union_shadow(black_box(&items), plane, pixel, RasterMode::Outer).unwrap();
            black_box(raster.occupied_count())
        })
    });
}

fn bench_verify_chain(c: &mut Criterion) {
    let out = seed_sequence();
    let chain = &out.sequence.chains_below(1)[0];
    c.bench_function(&format!("verify_chain/{}", execution_mode()), |b| {
        b.iter(|| black_box(verify_chain(black_box(chain))).all_ok())
    });
}

fn bench_thin_to_tubes(c: &mut Criterion) {
    let out = seed_sequence();
    c.bench_function(&format!("thin_to_tubes/{}", execution_mode()), |b| {
        b.iter(|| {
            let thin = thin_to_tubes(black_box(&out.sequence), 2, 1.0).unwrap();
            black_box(thin.certificate.total_width)
        })
    });
}

criterion_group! {
    name = benches;
    config = Criterion::default().sample_size(10);
    targets = bench_union_shadow, bench_verify_chain, bench_thin_to_tubes
}
criterion_main!(benches);
