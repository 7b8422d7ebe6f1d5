//! Verification sweeps: every cell compares a closed form with its oracle,
//! and reports are assembled in cell-key order whatever the thread count.

use std::collections::BTreeMap;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::djkm::{fock_bracket_check, fock_oracle, gamma_operator, thm_b_series, thm_b_slice, thm_b_window};
use crate::gl_finite::{
    bracket_check, gs_closed_form, gs_coeffs, negative_power_residue, star_oracle, star_oracle_coeffs, thm_a_series,
    thm_a_slice, thm_a_window,
};
use crate::laurent::{LaurentSeries, Window};
use crate::lemmas::Check;
use crate::partition::{enumerate, Partition};
use crate::poly::{Monomial, MultiPoly, Var};
use crate::rational::Rational;
use crate::series::PowerSeries;
use crate::symfunc::{elementary_e, power_p, schur_bialternant, schur_jacobitrudi};

/// How sweep cells are executed.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Exec {
    /// Worker threads; `None` uses the global pool, `Some(1)` runs inline.
    pub threads: Option<usize>,
}

impl Exec {
    pub fn sequential() -> Self {
        Exec { threads: Some(1) }
    }

    pub fn with_threads(n: usize) -> Self {
        Exec { threads: Some(n.max(1)) }
    }

    /// Maps `f` over `items`, keeping input order.
    pub fn map<T: Sync, R: Send>(&self, items: &[T], f: impl Fn(&T) -> R + Sync + Send) -> Vec<R> {
        #[cfg(feature = "parallel")]
        {
            use rayon::prelude::*;
            match self.threads {
                Some(1) => items.iter().map(f).collect(),
                Some(n) => match rayon::ThreadPoolBuilder::new().num_threads(n).build() {
                    Ok(pool) => pool.install(|| items.par_iter().map(&f).collect()),
                    Err(_) => items.iter().map(f).collect(),
                },
                None => items.par_iter().map(f).collect(),
            }
        }
        #[cfg(not(feature = "parallel"))]
        {
            items.iter().map(f).collect()
        }
    }

    /// Runs `f` inside the configured pool, so nested parallel work obeys it.
    pub fn install<R: Send>(&self, f: impl FnOnce() -> R + Send) -> R {
        #[cfg(feature = "parallel")]
        if let Some(n) = self.threads {
            if let Ok(pool) = rayon::ThreadPoolBuilder::new().num_threads(n).build() {
                return pool.install(f);
            }
        }
        f()
    }
}

/// One compared cell.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CellReport {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub r: Option<usize>,
    pub i: i32,
    pub j: i32,
    pub lambda: String,
    #[serde(rename = "match")]
    pub matched: bool,
    pub oracle: String,
    pub formula: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub x_truncation: Option<u32>,
}

/// A named list of cells.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SweepReport {
    pub name: String,
    pub cells: Vec<CellReport>,
    /// Failures outside any single cell, such as an infeasible window.
    pub errors: Vec<String>,
}

impl SweepReport {
    fn new(name: impl Into<String>) -> Self {
        SweepReport { name: name.into(), cells: Vec::new(), errors: Vec::new() }
    }

    pub fn passed(&self) -> bool {
        self.errors.is_empty() && self.cells.iter().all(|c| c.matched)
    }

    pub fn mismatches(&self) -> impl Iterator<Item = &CellReport> {
        self.cells.iter().filter(|c| !c.matched)
    }

    pub fn summary(&self) -> String {
        let bad = self.mismatches().count();
        format!("{}: {} cells, {} mismatched, {} errors", self.name, self.cells.len(), bad, self.errors.len())
    }
}

/// Cutoffs of the finite sweep.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FiniteCutoffs {
    pub ranks: Vec<usize>,
    pub imax: u32,
    pub jmax: u32,
    pub weight: u32,
    pub tcap: u32,
}

impl Default for FiniteCutoffs {
    fn default() -> Self {
        FiniteCutoffs { ranks: vec![2, 3], imax: 4, jmax: 4, weight: 4, tcap: 4 }
    }
}

fn cell(r: Option<usize>, i: i32, j: i32, lambda: &Partition, oracle: &MultiPoly, formula: &MultiPoly) -> CellReport {
    CellReport {
        r,
        i,
        j,
        lambda: lambda.to_string(),
        matched: oracle == formula,
        oracle: oracle.to_text(),
        formula: formula.to_text(),
        x_truncation: None,
    }
}

fn grid(imax: u32, jmax: u32, ranks: &[usize], weight: u32) -> Vec<(usize, u32, u32, Partition)> {
    let mut v = Vec::new();
    for &r in ranks {
        for lambda in enumerate(r, weight) {
            for i in 0..=imax {
                for j in 0..=jmax {
                    v.push((r, i, j, lambda.clone()));
                }
            }
        }
    }
    v
}

/// The structural series against the star oracle, one cell per `(r, i, j, lambda)`.
pub fn thm_a_sweep(cut: &FiniteCutoffs, exec: Exec) -> SweepReport {
    let mut rep = SweepReport::new("thmA");
    let mut series: BTreeMap<usize, LaurentSeries> = BTreeMap::new();
    for &r in &cut.ranks {
        match exec.install(|| thm_a_series(r, thm_a_window(r, cut.imax, cut.jmax, cut.tcap))) {
            Ok(s) => {
                series.insert(r, s);
            }
            Err(e) => rep.errors.push(format!("r={r}: {e}")),
        }
    }
    let cells = grid(cut.imax, cut.jmax, &cut.ranks, cut.weight);
    let out = exec.map(&cells, |(r, i, j, lambda)| {
        let s = series.get(r)?;
        let formula = match thm_a_slice(s, *i, *j, *r) {
            Ok(m) => m.get(lambda).cloned().unwrap_or_default(),
            Err(e) => return Some(Err(format!("r={r} z^{i} w^-{j}: {e}"))),
        };
        Some(Ok(cell(Some(*r), *i as i32, *j as i32, lambda, &star_oracle(*i, *j, lambda, *r), &formula)))
    });
    for c in out.into_iter().flatten() {
        match c {
            Ok(c) => rep.cells.push(c),
            Err(e) => rep.errors.push(e),
        }
    }
    rep
}

/// Nonzero `z^a`, `a < 0`, cells of the structural series inside its window.
pub fn negative_power_sweep(cut: &FiniteCutoffs, exec: Exec) -> SweepReport {
    let mut rep = SweepReport::new("thmA negative powers");
    for &r in &cut.ranks {
        let w = thm_a_window(r, cut.imax, cut.jmax, cut.tcap);
        match exec.install(|| thm_a_series(r, w)) {
            Ok(s) => {
                for a in w.zlo..0 {
                    for b in w.wlo..=w.whi {
                        let p = s.coefficient(a, b).unwrap_or_default();
                        rep.cells.push(CellReport {
                            r: Some(r),
                            i: a,
                            j: -b,
                            lambda: "*".into(),
                            matched: p.is_zero(),
                            oracle: "0".into(),
                            formula: p.to_text(),
                            x_truncation: None,
                        });
                    }
                }
                debug_assert!(negative_power_residue(&s).iter().all(|((a, _), _)| *a >= w.zlo));
            }
            Err(e) => rep.errors.push(format!("r={r}: {e}")),
        }
    }
    rep
}

/// The two-row determinant closed form against the star oracle.
pub fn gs_sweep(cut: &FiniteCutoffs, exec: Exec) -> SweepReport {
    let mut rep = SweepReport::new("gs");
    let mut keys = Vec::new();
    for &r in &cut.ranks {
        for lambda in enumerate(r, cut.weight) {
            keys.push((r, lambda));
        }
    }
    let out = exec.map(&keys, |(r, lambda)| -> std::result::Result<Vec<CellReport>, String> {
        let s = gs_closed_form(lambda, *r, cut.imax as i32).map_err(|e| e.to_string())?;
        let mut v = Vec::new();
        for i in 0..=cut.imax {
            for j in 0..=cut.jmax {
                let got = gs_coeffs(&s, i, j, *r).map_err(|e| e.to_string())?;
                let want = star_oracle_coeffs(i, j, lambda, *r);
                let f = crate::br::from_delta_basis(&got, *r);
                let o = crate::br::from_delta_basis(&want, *r);
                v.push(cell(Some(*r), i as i32, j as i32, lambda, &o, &f));
            }
        }
        Ok(v)
    });
    for c in out {
        match c {
            Ok(v) => rep.cells.extend(v),
            Err(e) => rep.errors.push(e),
        }
    }
    rep
}

/// Cutoffs of the Fock sweep.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FockCutoffs {
    pub window: u32,
    pub weight: u32,
    pub tcap: u32,
    pub trunc: u32,
    pub alphabet: usize,
}

impl Default for FockCutoffs {
    fn default() -> Self {
        FockCutoffs { window: 4, weight: 4, tcap: 4, trunc: 8, alphabet: 4 }
    }
}

fn fock_grid(cut: &FockCutoffs) -> Vec<(i32, i32, Partition)> {
    let m = cut.window as i32;
    let mut v = Vec::new();
    for lambda in enumerate(cut.alphabet.max(cut.weight as usize), cut.weight) {
        for i in -m..=m {
            for j in -m..=m {
                v.push((i, j, lambda.clone()));
            }
        }
    }
    v
}

/// The closed-form series of `gl_inf` against the Fock oracle.
pub fn thm_b_sweep(cut: &FockCutoffs, exec: Exec) -> SweepReport {
    let mut rep = SweepReport::new("thmB");
    let s = match exec.install(|| thm_b_series(cut.alphabet, cut.trunc, thm_b_window(cut.window, cut.tcap))) {
        Ok(s) => s,
        Err(e) => {
            rep.errors.push(e.to_string());
            return rep;
        }
    };
    let cells = fock_grid(cut);
    let out = exec.map(&cells, |(i, j, lambda)| -> std::result::Result<CellReport, String> {
        let slice = thm_b_slice(&s, *i, *j, cut.alphabet).map_err(|e| format!("z^{i} w^{}: {e}", -j))?;
        let formula = slice.get(lambda).cloned().unwrap_or_default();
        let mut c = cell(None, *i, *j, lambda, &fock_oracle(*i, *j, lambda, cut.trunc), &formula);
        c.x_truncation = Some(cut.trunc);
        Ok(c)
    });
    for c in out {
        match c {
            Ok(c) => rep.cells.push(c),
            Err(e) => rep.errors.push(e),
        }
    }
    rep
}

/// The vertex-operator pipeline against the closed-form series.
pub fn gamma_sweep(cut: &FockCutoffs, exec: Exec) -> SweepReport {
    let mut rep = SweepReport::new("gamma");
    let s = match exec.install(|| thm_b_series(cut.alphabet, cut.trunc, thm_b_window(cut.window, cut.tcap))) {
        Ok(s) => s,
        Err(e) => {
            rep.errors.push(e.to_string());
            return rep;
        }
    };
    let lambdas = enumerate(cut.alphabet.max(cut.weight as usize), cut.weight);
    let m = cut.window as i32;
    let out = exec.map(&lambdas, |lambda| -> std::result::Result<Vec<CellReport>, String> {
        let g = gamma_operator(lambda, cut.trunc, thm_b_window(cut.window, cut.tcap)).map_err(|e| e.to_string())?;
        let mut v = Vec::new();
        for i in -m..=m {
            for j in -m..=m {
                let want = thm_b_slice(&s, i, j, cut.alphabet).map_err(|e| e.to_string())?.get(lambda).cloned().unwrap_or_default();
                let got = g.coefficient(i, -j).map_err(|e| e.to_string())?;
                let mut c = cell(None, i, j, lambda, &want, &got);
                c.x_truncation = Some(cut.trunc);
                v.push(c);
            }
        }
        Ok(v)
    });
    for c in out {
        match c {
            Ok(v) => rep.cells.extend(v),
            Err(e) => rep.errors.push(e),
        }
    }
    rep
}

/// Commutator compatibility of the star action and of the Fock action:
/// exhaustive on the stated ranges, plus `extra` seeded samples from wider ones.
pub fn bracket_sweep(seed: u64, extra: usize, exec: Exec) -> SweepReport {
    let mut rep = SweepReport::new("bracket");
    type Case = (Option<usize>, (i32, i32), (i32, i32), Partition);
    let mut cases: Vec<Case> = Vec::new();
    for r in 1..=3 {
        for lambda in enumerate(r, 3) {
            for i in 0..=3 {
                for j in 0..=3 {
                    for k in 0..=3 {
                        for l in 0..=3 {
                            cases.push((Some(r), (i, j), (k, l), lambda.clone()));
                        }
                    }
                }
            }
        }
    }
    for lambda in enumerate(3, 3) {
        for i in -3..=3 {
            for j in -3..=3 {
                for k in -3..=3 {
                    for l in -3..=3 {
                        cases.push((None, (i, j), (k, l), lambda.clone()));
                    }
                }
            }
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..extra {
        let finite = rng.gen_bool(0.5);
        if finite {
            let r = rng.gen_range(1..=4);
            let ls = enumerate(r, 5);
            let lambda = ls[rng.gen_range(0..ls.len())].clone();
            let mut g = || rng.gen_range(0..=6);
            cases.push((Some(r), (g(), g()), (g(), g()), lambda));
        } else {
            let ls = enumerate(5, 5);
            let lambda = ls[rng.gen_range(0..ls.len())].clone();
            let mut g = || rng.gen_range(-6..=6);
            cases.push((None, (g(), g()), (g(), g()), lambda));
        }
    }
    let out = exec.map(&cases, |(r, m, n, lambda)| {
        let res = match r {
            Some(r) => bracket_check((m.0 as u32, m.1 as u32), (n.0 as u32, n.1 as u32), lambda, *r),
            None => fock_bracket_check(*m, *n, lambda),
        };
        CellReport {
            r: *r,
            i: m.0,
            j: m.1,
            lambda: lambda.to_string(),
            matched: res.is_ok(),
            oracle: format!("[E({},{}), E({},{})]", m.0, m.1, n.0, n.1),
            formula: res.err().unwrap_or_else(|| "ok".into()),
            x_truncation: None,
        }
    });
    rep.cells = out;
    rep
}

/// The r = 1 evaluation of the structural series, measured only.
pub fn thm_a_rank_one(cut: &FiniteCutoffs, exec: Exec) -> SweepReport {
    let c = FiniteCutoffs { ranks: vec![1], ..cut.clone() };
    let mut rep = thm_a_sweep(&c, exec);
    rep.name = "thmA r=1".into();
    rep
}

fn rand_poly(rng: &mut ChaCha8Rng, terms: usize) -> MultiPoly {
    let mut p = MultiPoly::zero();
    for _ in 0..terms {
        let m = Monomial::from_pairs(
            &[(Var::e(1), rng.gen_range(0..3u16)), (Var::e(2), rng.gen_range(0..2u16))]
                .into_iter()
                .filter(|&(_, e)| e > 0)
                .collect::<Vec<_>>(),
        );
        let q = Rational::new(rng.gen_range(-5..=5), rng.gen_range(1..=3));
        p.add_assign(&MultiPoly::term(m, q));
    }
    p
}

fn rand_series(rng: &mut ChaCha8Rng, order: usize, c0: Option<i64>) -> PowerSeries {
    let cs = (0..=order)
        .map(|k| match (k, c0) {
            (0, Some(c)) => MultiPoly::int(c),
            (0, None) => MultiPoly::zero(),
            _ => rand_poly(rng, 2),
        })
        .collect();
    PowerSeries::new(cs, order)
}

/// Round trips of the power-series kernel at order 8.
pub fn series_round_trips(seed: u64) -> Check {
    let mut c = Check::new("series_round_trips", "log(exp f) = f, exp(log g) = g, g * g^-1 = 1 and (g^-1)^-1 = g at order 8");
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let n = 8;
    for k in 0..20 {
        let f = rand_series(&mut rng, n, None);
        let g = rand_series(&mut rng, n, Some(1));
        let ok = f.exp(n, None).and_then(|e| e.log(n, None)).is_ok_and(|l| l == f);
        c.record(ok, || format!("sample {k}: log exp"));
        let ok = g.log(n, None).and_then(|l| l.exp(n, None)).is_ok_and(|e| e == g);
        c.record(ok, || format!("sample {k}: exp log"));
        let inv = g.inverse(n, None);
        let ok = inv.as_ref().is_ok_and(|i| g.mul(i, None) == PowerSeries::one(n));
        c.record(ok, || format!("sample {k}: g * g^-1"));
        let ok = inv.and_then(|i| i.inverse(n, None)).is_ok_and(|ii| ii == g);
        c.record(ok, || format!("sample {k}: double inverse"));
    }
    c
}

fn naive_product(p: &BTreeMap<(i32, i32), MultiPoly>, q: &BTreeMap<(i32, i32), MultiPoly>) -> BTreeMap<(i32, i32), MultiPoly> {
    let mut out: BTreeMap<(i32, i32), MultiPoly> = BTreeMap::new();
    for (&(a, b), x) in p {
        for (&(c, d), y) in q {
            out.entry((a + c, b + d)).or_insert_with(MultiPoly::zero).add_assign(&x.mul(y));
        }
    }
    out.retain(|_, v| !v.is_zero());
    out
}

/// Windowed products of truncated inputs against the full convolution.
pub fn laurent_against_convolution(seed: u64, samples: usize) -> Check {
    let mut c = Check::new(
        "laurent_against_convolution",
        "a windowed product agrees with the all-pairs convolution of the untruncated inputs on its sound window",
    );
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut refused = 0;
    for k in 0..samples {
        let mk = |rng: &mut ChaCha8Rng| {
            let mut cells = BTreeMap::new();
            for _ in 0..rng.gen_range(1..=8) {
                cells.insert((rng.gen_range(-3..=3), rng.gen_range(-3..=3)), rand_poly(rng, 2));
            }
            cells.retain(|_, p: &mut MultiPoly| !p.is_zero());
            cells
        };
        let (p, q) = (mk(&mut rng), mk(&mut rng));
        let cut = |rng: &mut ChaCha8Rng| {
            let zhi = rng.gen_range(-1..=3);
            let whi = rng.gen_range(-1..=3);
            Window::new(-3, zhi, -3, whi, None)
        };
        let (w1, w2) = (cut(&mut rng), cut(&mut rng));
        let full = naive_product(&p, &q);
        let a = LaurentSeries::from_cells(p.clone()).restrict(w1);
        let b = LaurentSeries::from_cells(q.clone()).restrict(w2);
        let prod = a.and_then(|a| b.and_then(|b| a.mul(&b)));
        match prod {
            Ok(s) => {
                let w = s.window();
                let mut ok = true;
                for (x, y) in w.cells() {
                    let want = full.get(&(x, y)).cloned().unwrap_or_default();
                    if s.coefficient(x, y).ok() != Some(want) {
                        ok = false;
                    }
                }
                c.record(ok, || format!("sample {k}: product disagrees on {w}"));
            }
            // an empty sound window is a legitimate refusal; the product
            // must never be wrong, but it may decline
            Err(crate::Error::Window(_)) => refused += 1,
            Err(e) => c.record(false, || format!("sample {k}: {e}")),
        }
    }
    // a check that mostly declines has tested nothing
    c.record(refused * 4 < samples, || format!("{refused} of {samples} products declined"));
    c
}

/// Jacobi-Trudi against the bialternant for `|lambda| <= 6`, `r <= 3`.
pub fn jacobi_trudi_bialternant() -> Check {
    let mut c = Check::new("jacobi_trudi_bialternant", "det(h_(lambda_j - j + i)) = a_(lambda + delta) / a_delta");
    for r in 1..=3 {
        for lambda in enumerate(r, 6) {
            let ok = schur_bialternant(&lambda, r).is_ok_and(|b| b == schur_jacobitrudi(&lambda, r));
            c.record(ok, || format!("r={r} ({lambda})"));
        }
    }
    c
}

/// `n e_n = sum_(i=1..n) (-1)^(i-1) e_(n-i) p_i` for `n <= 6`.
pub fn newton_identities() -> Check {
    let mut c = Check::new("newton_identities", "n e_n = sum_(i=1..n) (-1)^(i-1) e_(n-i) p_i");
    for r in 1..=4 {
        for n in 1..=6u32 {
            let mut rhs = MultiPoly::zero();
            for i in 1..=n {
                rhs.add_assign(&elementary_e(n - i, r).mul(&power_p(i, r)).scale(&Rational::sign(i as i64 - 1)));
            }
            let lhs = elementary_e(n, r).scale(&Rational::from_int(n as i64));
            c.record(lhs == rhs, || format!("r={r} n={n}"));
        }
    }
    c
}

/// All kernel checks.
pub fn kernel_suite(seed: u64) -> Vec<Check> {
    vec![series_round_trips(seed), laurent_against_convolution(seed, 100), jacobi_trudi_bialternant(), newton_identities()]
}
