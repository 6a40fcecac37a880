use criterion::{criterion_group, criterion_main, Criterion};

use qcoact::classify::{generate_constraints, solve, SolveOptions};
use qcoact::scalar::rat;
use qcoact::{preset_bl, preset_vs};

fn classification(c: &mut Criterion) {
    for m in 1..=3 {
        let sys = generate_constraints(&preset_vs(m).unwrap(), false).unwrap();
        c.bench_function(&format!("classify/vs/m{m}"), |b| {
            b.iter(|| solve(&sys, &SolveOptions::new(rat(3, 4), rat(3, 4))).unwrap())
        });
    }
    let sys = generate_constraints(&preset_bl(), true).unwrap();
    c.bench_function("classify/bl/ansatz", |b| {
        b.iter(|| solve(&sys, &SolveOptions::new(rat(3, 4), rat(3, 4))).unwrap())
    });
    c.bench_function("constraints/bl", |b| b.iter(|| generate_constraints(&preset_bl(), true).unwrap()));
}

criterion_group! {
    name = benches;
    config = Criterion::default().sample_size(10);
    targets = classification
}
criterion_main!(benches);
