use criterion::{criterion_group, criterion_main, Criterion};

use hopfmod::hopf::validate_hopf;
use hopfmod::projective::minimal_resolution;
use hopfmod::scenarios::corpus::{elementary_abelian, klein_four, klein_four_smash};
use hopfmod::variety::rank_variety_ideal;
use hopfmod::Module;
use hopfmod_bench::{quantum_swap, regular_operator, smash_regular};

fn linalg(c: &mut Criterion) {
    for rank in [4, 6] {
        let m = regular_operator(rank);
        c.bench_function(&format!("rref F2 {0}x{0}", m.rows()), |b| b.iter(|| m.rref()));
    }
}

fn tensor(c: &mut Criterion) {
    let (_, reg) = smash_regular();
    c.bench_function("tensor regular smash 8x8", |b| b.iter(|| reg.tensor(&reg).unwrap()));
}

fn resolution(c: &mut Criterion) {
    let k = Module::trivial(&klein_four());
    c.bench_function("resolve k over Klein four, 12 steps", |b| {
        b.iter(|| minimal_resolution(&k, 12).unwrap())
    });
}

fn varieties(c: &mut Criterion) {
    let a = elementary_abelian(2, 3).unwrap();
    let reg = Module::regular(&a);
    c.bench_function("rank variety ideal regular E8", |b| {
        b.iter(|| rank_variety_ideal(&reg).unwrap())
    });
}

fn validation(c: &mut Criterion) {
    let s = klein_four_smash();
    c.bench_function("validate Klein four smash", |b| b.iter(|| validate_hopf(&s)));
    let big = quantum_swap();
    let mut g = c.benchmark_group("large");
    g.sample_size(10);
    g.bench_function("validate quantum swap dim 162", |b| b.iter(|| validate_hopf(&big)));
    g.finish();
}

criterion_group!(benches, linalg, tensor, resolution, varieties, validation);
criterion_main!(benches);
