use archimax::{
    check_stdf_axioms, criterion_rh, ArchimaxCopula, Generator, Grid, Margin, TailDependence,
};
use archimax_bench::working_sample;
use criterion::{black_box, criterion_group, criterion_main, Criterion};

fn copula_cdf(c: &mut Criterion) {
    let copula = ArchimaxCopula::new(
        Generator::gumbel(2.5)
            .unwrap()
            .with_dimension_hint(4)
            .unwrap(),
        TailDependence::logistic(2.5, 4).unwrap(),
    )
    .unwrap();
    let u = [0.3, 0.55, 0.7, 0.85];
    c.bench_function("copula_cdf_dim4", |b| {
        b.iter(|| copula.cdf(black_box(&u)).unwrap())
    });
}

fn second_max_sweep(c: &mut Criterion) {
    let s = working_sample();
    let xs: Vec<f64> = (1..200).map(|i| i as f64 / 200.0).collect();
    c.bench_function("second_max_cdf_sweep", |b| {
        b.iter(|| {
            let mut acc = 0.0;
            for &x in &xs {
                acc += s.cdf_second_max(4, black_box(x)).unwrap();
            }
            acc
        })
    });
}

fn reverse_hazard_criterion(c: &mut Criterion) {
    let g = Generator::gumbel(4.0).unwrap();
    let grid = Grid::log(1e-4, 1e2, 500).unwrap();
    c.bench_function("reverse_hazard_criterion_500pt", |b| {
        b.iter(|| criterion_rh(black_box(&g), &grid, 1e-10).unwrap())
    });
}

fn tail_axioms(c: &mut Criterion) {
    let tail = TailDependence::logistic(2.5, 4).unwrap();
    c.bench_function("tail_axioms_100_trials", |b| {
        b.iter(|| check_stdf_axioms(black_box(&tail), 100, 42).unwrap())
    });
}

fn margin_density(c: &mut Criterion) {
    let m = Margin::exponential(1.5).unwrap();
    c.bench_function("margin_pdf", |b| b.iter(|| m.pdf(black_box(0.8)).unwrap()));
}

criterion_group!(
    benches,
    copula_cdf,
    second_max_sweep,
    reverse_hazard_criterion,
    tail_axioms,
    margin_density
);
criterion_main!(benches);
