use std::hint::black_box;
use std::sync::Arc;

use criterion::{criterion_group, criterion_main, Criterion};
use slice_burnside::group::{parse_group_spec, DEFAULT_ORDER_CAP};
use slice_burnside::ideals::GroupUniverse;
use slice_burnside::SliceRing;

const SPECS: &[&str] = &["dihedral:8", "heis:3", "elab:2^3"];

fn ring(spec: &str) -> Arc<SliceRing> {
    SliceRing::new(Arc::new(parse_group_spec(spec, DEFAULT_ORDER_CAP).unwrap()))
}

fn construction(c: &mut Criterion) {
    for spec in SPECS {
        let g = Arc::new(parse_group_spec(spec, DEFAULT_ORDER_CAP).unwrap());
        c.bench_function(&format!("ring/{spec}"), |b| b.iter(|| SliceRing::new(black_box(g.clone()))));
    }
}

fn basis_products(c: &mut Criterion) {
    for spec in SPECS {
        let r = ring(spec);
        let basis: Vec<_> = (0..r.len()).map(|i| r.basis(i)).collect();
        c.bench_function(&format!("basis_mul/{spec}"), |b| {
            b.iter(|| {
                for x in &basis {
                    for y in &basis {
                        black_box(x * y);
                    }
                }
            })
        });
    }
}

fn idempotents(c: &mut Criterion) {
    for spec in SPECS {
        c.bench_function(&format!("idempotents/{spec}"), |b| {
            b.iter_batched(
                || ring(spec),
                |r| (0..r.len()).for_each(|i| drop(black_box(r.idempotent(i)))),
                criterion::BatchSize::SmallInput,
            )
        });
    }
}

fn universe(c: &mut Criterion) {
    let mut g = c.benchmark_group("universe");
    g.sample_size(10);
    g.bench_function("p2_bound8", |b| b.iter(|| GroupUniverse::new(2, 8).unwrap()));
    g.bench_function("p3_bound27", |b| b.iter(|| GroupUniverse::new(3, 27).unwrap()));
    g.finish();
}

criterion_group!(benches, construction, basis_products, idempotents, universe);
criterion_main!(benches);
