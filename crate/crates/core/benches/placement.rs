use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use rand::SeedableRng;

use skyfair_core::baselines::{exhaustive_search, pso_search};
use skyfair_core::qplace::Lattice;
use skyfair_core::{
    generate_scenario, Evaluator, Exec, PsoParams, ScenarioConfig, SimRng, Streams,
};

fn modes() -> Vec<(&'static str, Exec)> {
    let mut m = vec![("sequential", Exec::Sequential)];
    if cfg!(feature = "parallel") {
        m.push(("parallel", Exec::Parallel));
    }
    m
}

fn placement(c: &mut Criterion) {
    let config = ScenarioConfig::desk();
    let scenario = generate_scenario(&config, &Streams::new(1)).unwrap();
    let ev = Evaluator::new(&scenario, &scenario.initial_users).unwrap();
    let lattice = Lattice::from_region(&config.region, config.upsilon_m).unwrap();

    let mut group = c.benchmark_group("exhaustive_desk");
    group.sample_size(10);
    for (name, exec) in modes() {
        group.bench_with_input(BenchmarkId::from_parameter(name), &exec, |b, exec| {
            b.iter(|| exhaustive_search(&ev, &lattice, 1, *exec).unwrap())
        });
    }
    group.finish();

    let mut group = c.benchmark_group("pso_desk");
    group.sample_size(10);
    let params = PsoParams::default();
    for (name, exec) in modes() {
        group.bench_with_input(BenchmarkId::from_parameter(name), &exec, |b, exec| {
            b.iter(|| {
                pso_search(&ev, &lattice, &params, &mut SimRng::seed_from_u64(2), *exec).unwrap()
            })
        });
    }
    group.finish();
}

criterion_group!(benches, placement);
criterion_main!(benches);
