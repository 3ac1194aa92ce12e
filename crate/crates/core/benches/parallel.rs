use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use rhogeom::gamma::{gamma_estimate_with, james_constant_estimate_with};
use rhogeom::symmetry::{oracle_right_symmetric, probe_space_symmetry, OracleConfig};
use rhogeom::verify::{run_criterion, VerifyConfig};
use rhogeom::{Execution, Space};

const MODES: [(&str, Execution); 2] = [("sequential", Execution::Sequential), ("parallel", Execution::Parallel)];

fn gamma_grid(c: &mut Criterion) {
    let mut group = c.benchmark_group("gamma_estimate");
    let spaces = [("l3", Space::lp(3.0, 2).unwrap()), ("octagon", Space::regular(4).unwrap())];
    for (name, space) in &spaces {
        for (mode, exec) in MODES {
            group.bench_with_input(BenchmarkId::new(mode, name), space, |b, s| {
                b.iter(|| gamma_estimate_with(black_box(s), 1440, 60, exec).unwrap())
            });
        }
    }
    group.finish();
}

fn james(c: &mut Criterion) {
    let mut group = c.benchmark_group("james_constant");
    let space = Space::l1_linf();
    for (mode, exec) in MODES {
        group.bench_function(mode, |b| b.iter(|| james_constant_estimate_with(black_box(&space), 720, 40, exec).unwrap()));
    }
    group.finish();
}

fn oracles(c: &mut Criterion) {
    let mut group = c.benchmark_group("symmetry_oracles");
    group.sample_size(20);
    let l1 = Space::l1(4).unwrap();
    let x = [0.4, -0.3, 0.2, 0.1];
    for (mode, exec) in MODES {
        let cfg = OracleConfig { trials: 500, seed: 42, exec };
        group.bench_function(BenchmarkId::new("right_l1", mode), |b| {
            b.iter(|| oracle_right_symmetric(black_box(&l1), &x, &cfg).unwrap())
        });
        let probe = OracleConfig { trials: 64, seed: 42, exec };
        group.bench_function(BenchmarkId::new("probe_l3", mode), |b| {
            let space = Space::lp(3.0, 2).unwrap();
            b.iter(|| probe_space_symmetry(black_box(&space), &probe).unwrap())
        });
    }
    group.finish();
}

fn criteria(c: &mut Criterion) {
    let mut group = c.benchmark_group("verify");
    group.sample_size(10);
    for (mode, exec) in MODES {
        let cfg = VerifyConfig { seed: 42, trials: 100, exec };
        for id in [6u8, 8, 10] {
            group.bench_function(BenchmarkId::new(format!("criterion_{id}"), mode), |b| {
                b.iter(|| run_criterion(id, black_box(&cfg)).unwrap())
            });
        }
    }
    group.finish();
}

criterion_group!(benches, gamma_grid, james, oracles, criteria);
criterion_main!(benches);
