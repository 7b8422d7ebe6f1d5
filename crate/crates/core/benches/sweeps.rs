use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

use glrep::sweep::{bracket_sweep, gamma_sweep, gs_sweep, thm_b_sweep, Exec, FiniteCutoffs, FockCutoffs};

fn modes() -> Vec<(&'static str, Exec)> {
    let mut v = vec![("sequential", Exec::sequential())];
    if cfg!(feature = "parallel") {
        v.push(("parallel", Exec::default()));
    }
    v
}

fn sweeps(c: &mut Criterion) {
    let fin = FiniteCutoffs::default();
    let fock = FockCutoffs { window: 3, weight: 3, ..FockCutoffs::default() };
    let mut g = c.benchmark_group("sweeps");
    g.sample_size(10);
    for (name, exec) in modes() {
        g.bench_with_input(BenchmarkId::new("gs", name), &exec, |b, &e| b.iter(|| gs_sweep(&fin, e)));
        g.bench_with_input(BenchmarkId::new("thmB", name), &exec, |b, &e| b.iter(|| thm_b_sweep(&fock, e)));
        g.bench_with_input(BenchmarkId::new("gamma", name), &exec, |b, &e| b.iter(|| gamma_sweep(&fock, e)));
        g.bench_with_input(BenchmarkId::new("bracket", name), &exec, |b, &e| b.iter(|| bracket_sweep(7, 0, e)));
    }
    g.finish();
}

criterion_group!(benches, sweeps);
criterion_main!(benches);
