use std::time::Duration;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use eqlines::constructions::witt276;
use eqlines::exactnum::{ExactScalar, Rational};
use eqlines::par;
use eqlines::saturate::{class_codes, m_alpha};
use eqlines::seidel::base_size;

fn modes() -> [(&'static str, bool); 2] {
    [("parallel", false), ("sequential", true)]
}

fn saturation(c: &mut Criterion) {
    // class enumeration is cached after the first call, so this times seeds + candidates + cliques
    class_codes(7);
    let mut g = c.benchmark_group("m_alpha_rank8");
    g.sample_size(10).measurement_time(Duration::from_secs(10));
    for (name, seq) in modes() {
        for (label, alpha) in [("1/3", Rational::new(1, 3)), ("1/5", Rational::new(1, 5))] {
            g.bench_with_input(BenchmarkId::new(name, label), &alpha, |b, a| {
                par::set_sequential(seq);
                b.iter(|| m_alpha(8, &ExactScalar::Q(a.clone())).unwrap().value)
            });
        }
    }
    par::set_sequential(false);
    g.finish();
}

fn witt_base_size(c: &mut Criterion) {
    let w = witt276();
    let mut g = c.benchmark_group("base_size_witt276");
    g.sample_size(10);
    for (name, seq) in modes() {
        g.bench_function(name, |b| {
            par::set_sequential(seq);
            b.iter(|| base_size(&w.normalized).unwrap().k)
        });
    }
    par::set_sequential(false);
    g.finish();
}

criterion_group!(benches, saturation, witt_base_size);
criterion_main!(benches);
