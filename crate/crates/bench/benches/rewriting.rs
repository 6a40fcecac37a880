use criterion::{criterion_group, criterion_main, Criterion};

use qcoact::invariants::{verify_appendix, Decider};
use qcoact::sample;
use qcoact::{preset_bl, preset_suq2, preset_vs, Presentation};

fn normalize_random(c: &mut Criterion, label: &str, pres: Presentation, degree: usize) {
    let mut rng = sample::rng(7);
    let inputs: Vec<_> = (0..32).map(|_| sample::element(&mut rng, pres.generator_count(), degree)).collect();
    c.bench_function(&format!("normalize/{label}/degree{degree}"), |b| {
        b.iter(|| {
            for e in &inputs {
                std::hint::black_box(pres.normalize(e).unwrap());
            }
        })
    });
}

fn rewriting(c: &mut Criterion) {
    normalize_random(c, "suq2", preset_suq2(), 6);
    normalize_random(c, "vs7", preset_vs(3).unwrap(), 6);
    normalize_random(c, "s7q", preset_bl(), 6);
    c.bench_function("critical-pairs/s7q", |b| b.iter(|| preset_bl().nonconfluent_pairs(5).unwrap()));
    c.bench_function("field-completion/s7q", |b| b.iter(|| Decider::new().unwrap()));
    c.bench_function("appendix", |b| b.iter(|| verify_appendix().unwrap()));
}

criterion_group! {
    name = benches;
    config = Criterion::default().sample_size(10);
    targets = rewriting
}
criterion_main!(benches);
