use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use hurwitz_bench::{hurwitz_radon, scattered_set, yuzvinsky};
use hurwitz_core::pairing::{
    check_pair_criterion, verify_identity_numeric, verify_identity_symbolic,
};
use hurwitz_core::setops::search_clique;
use hurwitz_core::{SearchBudget, TwistSpec};

fn twist_kernels(c: &mut Criterion) {
    let mut group = c.benchmark_group("exponent, all pairs at n=8");
    let specs = [
        ("clifford", TwistSpec::clifford(8).unwrap()),
        ("octonion", TwistSpec::octonion(8).unwrap()),
        ("p4", TwistSpec::p(8, 4).unwrap()),
        ("p8", TwistSpec::p(8, 8).unwrap()),
        ("yuzvinsky", yuzvinsky(8).spec),
    ];
    for (name, spec) in &specs {
        group.bench_function(*name, |b| {
            b.iter(|| {
                let mut acc = 0;
                for x in 0..256 {
                    for y in 0..256 {
                        acc ^= spec.exponent_word(black_box(x), y);
                    }
                }
                acc
            })
        });
    }
    group.finish();
}

fn sumsets(c: &mut Criterion) {
    let mut group = c.benchmark_group("sumset");
    for n in [8, 12, 16] {
        let (a, b) = (scattered_set(n, 1), scattered_set(n, 7));
        let small = hurwitz_radon(n).a;
        group.bench_with_input(BenchmarkId::new("dense+dense", n), &n, |bench, _| {
            bench.iter(|| black_box(&a).sumset(black_box(&b)).unwrap())
        });
        group.bench_with_input(BenchmarkId::new("hurwitz+dense", n), &n, |bench, _| {
            bench.iter(|| black_box(&small).sumset(black_box(&b)).unwrap())
        });
    }
    group.finish();
}

fn criterion_checks(c: &mut Criterion) {
    let mut group = c.benchmark_group("pair criterion");
    for n in [7, 10, 12] {
        let hr = hurwitz_radon(n);
        group.bench_with_input(BenchmarkId::new("hurwitz-radon", n), &n, |b, _| {
            b.iter(|| check_pair_criterion(&hr.spec, &hr.a, &hr.b).unwrap())
        });
    }
    for n in [8, 10] {
        let y = yuzvinsky(n);
        group.bench_with_input(BenchmarkId::new("yuzvinsky", n), &n, |b, _| {
            b.iter(|| check_pair_criterion(&y.spec, &y.a, &y.b).unwrap())
        });
    }
    group.finish();
}

fn identity_checks(c: &mut Criterion) {
    let mut group = c.benchmark_group("identity");
    group.sample_size(20);
    for n in [4, 7, 9] {
        let id = hurwitz_radon(n).identity().unwrap();
        group.bench_with_input(BenchmarkId::new("symbolic", n), &n, |b, _| {
            b.iter(|| verify_identity_symbolic(black_box(&id)).unwrap())
        });
        group.bench_with_input(BenchmarkId::new("numeric x100", n), &n, |b, _| {
            b.iter(|| verify_identity_numeric(black_box(&id), 100, 0).unwrap())
        });
    }
    group.finish();
}

fn clique_search(c: &mut Criterion) {
    let mut group = c.benchmark_group("clique search");
    group.sample_size(10);
    for (n, target) in [(4, 9), (6, 12), (8, 17)] {
        let spec = TwistSpec::p(n, 4).unwrap();
        group.bench_with_input(
            BenchmarkId::new("p4", format!("n={n} target={target}")),
            &n,
            |b, _| b.iter(|| search_clique(&spec, target, &SearchBudget::default()).unwrap()),
        );
    }
    group.finish();
}

criterion_group!(
    benches,
    twist_kernels,
    sumsets,
    criterion_checks,
    identity_checks,
    clique_search
);
criterion_main!(benches);
