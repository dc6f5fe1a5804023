use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use pathhom::hochschild::{hochschild_cochain_complex, standard, DEFAULT_HOCHSCHILD_BUDGET};
use pathhom::suite::{realization_suite, SuiteConfig};
use pathhom::{build_a_s, cubical_digraph, path_complex_of_digraph, path_homology, Execution, Rationals, RingSpec};

const MODES: [(&str, Execution); 2] = [("sequential", Execution::Sequential), ("parallel", Execution::Parallel)];

fn realization(c: &mut Criterion) {
    let cfg = SuiteConfig { count: 40, ..SuiteConfig::default() };
    let mut g = c.benchmark_group("realization_suite_40");
    g.sample_size(10);
    for (name, exec) in MODES {
        g.bench_with_input(BenchmarkId::from_parameter(name), &exec, |b, &exec| {
            b.iter(|| realization_suite(black_box(&cfg), &[RingSpec::Integers, RingSpec::PrimeField(2)], exec).unwrap())
        });
    }
    g.finish();
}

fn hochschild_assembly(c: &mut Criterion) {
    let a = build_a_s(&standard::triangle_boundary());
    let mut g = c.benchmark_group("hochschild_cochains_triangle_deg3");
    g.sample_size(10);
    for (name, exec) in MODES {
        g.bench_with_input(BenchmarkId::from_parameter(name), &exec, |b, &exec| {
            b.iter(|| hochschild_cochain_complex(&Rationals, black_box(&a), 3, DEFAULT_HOCHSCHILD_BUDGET, exec).unwrap())
        });
    }
    g.finish();
}

fn rp2_homology(c: &mut Criterion) {
    let pc = path_complex_of_digraph(&cubical_digraph(&standard::rp2()), 3).unwrap();
    let mut g = c.benchmark_group("rp2_cubical_homology_z");
    g.sample_size(10);
    for (name, exec) in MODES {
        g.bench_with_input(BenchmarkId::from_parameter(name), &exec, |b, &exec| {
            b.iter(|| path_homology(black_box(&pc), RingSpec::Integers, 2, exec).unwrap())
        });
    }
    g.finish();
}

criterion_group!(benches, realization, hochschild_assembly, rp2_homology);
criterion_main!(benches);
