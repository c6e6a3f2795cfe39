use cnorm_core::series::{centralizer_norm, centralizer_norm_naive};
use cnorm_core::{c_series, make_dihedral, make_elementary_abelian, make_symmetric, run_all};
use criterion::{black_box, criterion_group, criterion_main, Criterion};

fn norms(c: &mut Criterion) {
    let d64 = make_dihedral(64).unwrap();
    let s5 = make_symmetric(5).unwrap();
    c.bench_function("centralizer_norm D_64", |b| {
        b.iter(|| centralizer_norm(black_box(&d64)))
    });
    c.bench_function("centralizer_norm_naive D_64", |b| {
        b.iter(|| centralizer_norm_naive(black_box(&d64)))
    });
    c.bench_function("centralizer_norm S_5", |b| {
        b.iter(|| centralizer_norm(black_box(&s5)))
    });
}

fn series(c: &mut Criterion) {
    let d128 = make_dihedral(128).unwrap();
    let e28 = make_elementary_abelian(2, 8).unwrap();
    c.bench_function("c_series D_128", |b| b.iter(|| c_series(black_box(&d128))));
    c.bench_function("c_series Z_2^8", |b| b.iter(|| c_series(black_box(&e28))));
}

fn verification(c: &mut Criterion) {
    let d16 = make_dihedral(16).unwrap();
    let mut group = c.benchmark_group("run_all");
    group.sample_size(20);
    group.bench_function("D_16", |b| b.iter(|| run_all(black_box(&d16), "D_16")));
    group.finish();
}

criterion_group!(benches, norms, series, verification);
criterion_main!(benches);
