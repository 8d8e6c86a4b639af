use std::hint::black_box;
use std::sync::Arc;

use criterion::{criterion_group, criterion_main, Criterion};
use flagdom_core::chainball::{connect, random_domain_point, rng_from_seed, DEFAULT_KMAX, DEFAULT_TOL_MEM};
use flagdom_core::verify::{check_jacobi, JacobiMode};
use flagdom_core::{classify, DomainSpec, RootSystem, StructureTable};

const TYPES: [&str; 4] = ["A4", "D5", "F4", "E6"];

fn root_systems(c: &mut Criterion) {
    let mut g = c.benchmark_group("root_system");
    for t in TYPES.iter().chain(&["E8"]) {
        let ty = t.parse().unwrap();
        g.bench_function(*t, |b| b.iter(|| RootSystem::new(black_box(ty))));
    }
    g.finish();
}

fn structure_tables(c: &mut Criterion) {
    let mut g = c.benchmark_group("structure_table");
    for t in TYPES {
        let rs = Arc::new(RootSystem::new(t.parse().unwrap()));
        g.bench_function(t, |b| b.iter(|| StructureTable::new(black_box(rs.clone()))));
    }
    g.finish();
}

fn jacobi(c: &mut Criterion) {
    let t = StructureTable::new(Arc::new(RootSystem::new("F4".parse().unwrap())));
    c.bench_function("jacobi_exhaustive/F4", |b| b.iter(|| check_jacobi(&t, JacobiMode::Exhaustive)));
}

fn enumeration(c: &mut Criterion) {
    let mut g = c.benchmark_group("classify_all");
    g.sample_size(10);
    for t in TYPES {
        let rs = Arc::new(RootSystem::new(t.parse().unwrap()));
        let specs = DomainSpec::all(&rs);
        g.bench_function(t, |b| b.iter(|| specs.iter().map(classify).filter(|r| r.classical).count()));
    }
    g.finish();
}

fn chains(c: &mut Criterion) {
    let mut rng = rng_from_seed(1);
    let pairs: Vec<_> = (0..16)
        .map(|_| (random_domain_point(&mut rng).unwrap(), random_domain_point(&mut rng).unwrap()))
        .collect();
    c.bench_function("connect/16_pairs", |b| {
        b.iter(|| {
            pairs
                .iter()
                .enumerate()
                .map(|(i, (x, y))| connect(x, y, DEFAULT_KMAX, i as u64, DEFAULT_TOL_MEM).unwrap().k())
                .sum::<usize>()
        })
    });
}

criterion_group!(benches, root_systems, structure_tables, jacobi, enumeration, chains);
criterion_main!(benches);
