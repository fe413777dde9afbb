use std::hint::black_box;

use criterion::{criterion_group, criterion_main, Criterion};
use slater_bench::{slater_point, yukawa_point};
use slater_core::amplitudes::{
    cheshire_series, s1_general_term_gamma, s1_series_eval, theorem3_series, SeriesIndexBounds,
};
use slater_core::ellipsoidal::t_abc_series;
use slater_core::theorems::{theorem1_eval, theorem6_eval, two_range_mos_eval};
use slater_core::TruncationPolicy;

fn yukawa(c: &mut Criterion) {
    let p = yukawa_point();
    let pol = TruncationPolicy::default();
    c.bench_function("theorem1_eval", |b| b.iter(|| theorem1_eval(black_box(&p), &pol)));
    c.bench_function("theorem6_eval j=2", |b| {
        b.iter(|| theorem6_eval(2, black_box(&p), &pol))
    });
    c.bench_function("two_range_mos_eval n=60", |b| {
        b.iter(|| two_range_mos_eval(black_box(0.9), 0.4, 1.1, 0.3, 60))
    });
}

fn amplitudes(c: &mut Criterion) {
    let pol = TruncationPolicy::default();
    let p = slater_point();
    c.bench_function("cheshire_series", |b| {
        b.iter(|| cheshire_series(black_box(0.82), 0.036, 0.019, 0.019 * 0.036, &pol))
    });
    c.bench_function("s1_general_term_gamma n=3", |b| {
        b.iter(|| s1_general_term_gamma(3, black_box(&p)))
    });
    c.bench_function("s1_series_eval", |b| {
        b.iter(|| s1_series_eval(black_box(&p), &pol, 1e-10))
    });
    let pair = slater_core::amplitudes::SlaterPair::collinear(0.11, 0.13, 0.17, 0.0);
    let bounds = SeriesIndexBounds::default();
    c.bench_function("theorem3_series", |b| {
        b.iter(|| theorem3_series(black_box(&pair), &bounds, &pol))
    });
}

fn ellipsoidal(c: &mut Criterion) {
    let pol = TruncationPolicy::fixed_terms(40);
    c.bench_function("t_abc_series 40 terms", |b| {
        b.iter(|| t_abc_series(black_box(0.11), &pol))
    });
}

criterion_group!(benches, yukawa, amplitudes, ellipsoidal);
criterion_main!(benches);
