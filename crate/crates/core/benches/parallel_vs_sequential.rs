use std::hint::black_box;
use std::sync::Arc;

use btquot::algebra::{FieldCtx, Place};
use btquot::projective::h_group;
use btquot::upsilon::{double_coset_partition, enumerate_upsilon_with, SearchOptions};
use btquot::verify::{verify_instance, VerifyOptions};
use btquot::Exec;
use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

const MODES: [(&str, Exec); 2] = [
    ("sequential", Exec::Sequential),
    ("parallel", Exec::Parallel),
];

fn place(q: u64, d: usize) -> Place {
    Place::first_of_degree(Arc::new(FieldCtx::new(q).unwrap()), d).unwrap()
}

fn enumeration(c: &mut Criterion) {
    let mut group = c.benchmark_group("enumerate_upsilon");
    for (q, d, n, m) in [(2u64, 7usize, 1u32, 2u32), (3, 4, 0, 2)] {
        let p = place(q, d);
        for (name, exec) in MODES {
            let opts = SearchOptions {
                exec,
                ..SearchOptions::default()
            };
            group.bench_with_input(
                BenchmarkId::new(name, format!("q{q}d{d}n{n}m{m}")),
                &p,
                |b, p| {
                    b.iter(|| {
                        enumerate_upsilon_with(black_box(p), n, m, opts)
                            .unwrap()
                            .len()
                    })
                },
            );
        }
    }
    group.finish();
}

fn double_cosets(c: &mut Criterion) {
    let mut group = c.benchmark_group("double_coset_partition");
    let p = place(3, 4);
    let k = p.field().clone();
    let u = enumerate_upsilon_with(&p, 0, 2, SearchOptions::default()).unwrap();
    let (h0, h2) = (h_group(&k, 0), h_group(&k, 2));
    for (name, exec) in MODES {
        group.bench_function(BenchmarkId::new(name, "q3d4n0m2"), |b| {
            b.iter(|| {
                double_coset_partition(black_box(&u), &h0, &h2, exec)
                    .unwrap()
                    .class_count()
            })
        });
    }
    group.finish();
}

fn verification(c: &mut Criterion) {
    let mut group = c.benchmark_group("verify_instance");
    group.sample_size(10);
    for (q, d) in [(2u64, 5usize), (3, 3)] {
        let p = place(q, d);
        for (name, exec) in MODES {
            let opts = VerifyOptions {
                exec,
                ..VerifyOptions::default()
            };
            group.bench_with_input(BenchmarkId::new(name, format!("q{q}d{d}")), &p, |b, p| {
                b.iter(|| {
                    verify_instance(black_box(p), d as u32 + 2, &opts)
                        .unwrap()
                        .pass
                })
            });
        }
    }
    group.finish();
}

criterion_group!(benches, enumeration, double_cosets, verification);
criterion_main!(benches);
