use std::hint::black_box;

use criterion::{criterion_group, criterion_main, Criterion};

use pronormal_bench::{group, hall, m11_generators};
use pronormal_core::atlas::GroupSpec;
use pronormal_core::hall::sylow;
use pronormal_core::{hall_subgroups, is_pronormal_definition, is_pronormal_reduced, PiSet, SearchMode};

fn schreier_sims(c: &mut Criterion) {
    c.bench_function("schreier_sims_m11", |b| b.iter(|| black_box(m11_generators()).order()));
}

fn normalizer(c: &mut Criterion) {
    let g = group(GroupSpec::Alternating(8));
    let s = sylow(&g, 2).unwrap();
    c.bench_function("normalizer_sylow2_alt8", |b| {
        b.iter(|| g.normalizer(black_box(&s)).unwrap())
    });
}

fn deciders(c: &mut Criterion) {
    let (g, h) = hall(GroupSpec::M11, "2,3");
    let s = sylow(&h, 2).unwrap();
    c.bench_function("definition_m11_hall23", |b| {
        b.iter(|| is_pronormal_definition(&g, black_box(&h)).unwrap())
    });
    c.bench_function("reduced_m11_hall23", |b| {
        b.iter(|| is_pronormal_reduced(&g, black_box(&h), &s).unwrap())
    });
}

fn hall_search(c: &mut Criterion) {
    let g = group(GroupSpec::Psl2(13));
    let pi: PiSet = "2,3".parse().unwrap();
    let mut group = c.benchmark_group("hall_psl2_13");
    group.sample_size(20);
    group.bench_function("exhaustive", |b| {
        b.iter(|| hall_subgroups(&g, &pi, SearchMode::Exhaustive).unwrap())
    });
    group.bench_function("seeded", |b| {
        b.iter(|| hall_subgroups(&g, &pi, SearchMode::Seeded).unwrap())
    });
    group.finish();
}

criterion_group!(benches, schreier_sims, normalizer, deciders, hall_search);
criterion_main!(benches);
