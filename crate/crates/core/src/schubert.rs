//! Schubert derivations `sigma_+`, `sigma-bar_+`, `sigma_-`, `sigma-bar_-`.
//!
//! All four are Hasse-Schmidt derivations: on a wedge they act factor by
//! factor,
//!
//! ```text
//! sigma_+(z) X^j = sum_i X^(j+i) z^i        sigma-bar_+(z) X^j = X^j - X^(j+1) z
//! sigma_-(z) X^j = sum_i X^(j-i) z^-i       sigma-bar_-(z) X^j = X^j - X^(j-1)/z
//! ```
//!
//! with `X^i = 0` for `i < 0` on the finite exterior algebra. A [`Series`]
//! holds a wedge- (or Fock-) valued series in `z`, `w` and the alphabet
//! `t_k`, the last folded into polynomial coefficients. Raising operators are
//! infinite and need a cap on their variable: the series is then exact at
//! exponents up to the cap. Lowering operators on a capped variable would
//! need the unknown part and are refused.

use std::collections::BTreeMap;
use std::fmt;

use crate::br::{self, schur_delta};
use crate::error::{Error, Result};
use crate::exterior::{sort_sign, Key, Scalar, Wedge};
use crate::partition::Partition;
use crate::poly::{Monomial, MultiPoly, Var};
use crate::rational::Rational;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Op {
    Plus,
    BarPlus,
    Minus,
    BarMinus,
}

impl Op {
    pub fn raises(self) -> bool {
        matches!(self, Op::Plus | Op::BarPlus)
    }
}

/// Which formal variable an operator is evaluated at.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Slot {
    Z,
    W,
    T(u32),
}

/// A basis state on which the four derivations act.
pub trait Basis: Ord + Clone + Send + Sync + fmt::Debug {
    /// Terms `(shift, state, coefficient)` of the operator applied to the
    /// state. `max` bounds the shift of raising operators.
    fn expand(&self, op: Op, max: Option<u32>) -> Result<Vec<(i32, Self, i64)>>;
}

/// The HS expansion of a wedge monomial, factor by factor. Lowered exponents
/// below `floor` vanish.
pub fn expand_factors(op: Op, exps: &[i32], floor: i32, max: Option<u32>) -> Result<Vec<(i32, Key, i64)>> {
    if op == Op::Plus && max.is_none() {
        return Err(Error::Truncation("sigma_+ needs an order".into()));
    }
    let mut acc: BTreeMap<(i32, Key), i64> = BTreeMap::new();
    let mut cur: Vec<i32> = exps.to_vec();
    #[allow(clippy::too_many_arguments)]
    fn go(
        op: Op,
        exps: &[i32],
        floor: i32,
        budget: Option<u32>,
        pos: usize,
        shift: i32,
        neg: bool,
        cur: &mut Vec<i32>,
        acc: &mut BTreeMap<(i32, Key), i64>,
    ) {
        if pos == exps.len() {
            let mut k: Key = cur.iter().copied().collect();
            if let Some(odd) = sort_sign(&mut k) {
                let e = acc.entry((shift, k)).or_insert(0);
                *e += if odd ^ neg { -1 } else { 1 };
            }
            return;
        }
        let e = exps[pos];
        let left = budget.map(|b| b as i64).unwrap_or(i64::MAX);
        let choices: Vec<(i32, bool)> = match op {
            Op::Plus => (0..=left).map(|d| (d as i32, false)).collect(),
            Op::BarPlus => {
                let mut v = vec![(0, false)];
                if left >= 1 {
                    v.push((1, true));
                }
                v
            }
            Op::Minus => (0..=((e - floor) as i64).min(left)).map(|d| (-(d as i32), false)).collect(),
            Op::BarMinus => {
                let mut v = vec![(0, false)];
                if e > floor && left >= 1 {
                    v.push((-1, true));
                }
                v
            }
        };
        for (d, flip) in choices {
            cur[pos] = e + d;
            let used = d.unsigned_abs();
            go(op, exps, floor, budget.map(|b| b - used), pos + 1, shift + d, neg ^ flip, cur, acc);
        }
        cur[pos] = e;
    }
    go(op, exps, floor, max, 0, 0, false, &mut cur, &mut acc);
    Ok(acc.into_iter().filter(|(_, c)| *c != 0).map(|((s, k), c)| (s, k, c)).collect())
}

impl Basis for Key {
    fn expand(&self, op: Op, max: Option<u32>) -> Result<Vec<(i32, Self, i64)>> {
        expand_factors(op, self, 0, max)
    }
}

/// A state-valued series in `z`, `w`, `t_1..`: cells keyed by
/// `(z-exponent, w-exponent)`.
#[derive(Clone, PartialEq)]
pub struct Series<K: Basis> {
    cells: BTreeMap<(i32, i32), BTreeMap<K, MultiPoly>>,
    zcap: Option<i32>,
    wcap: Option<i32>,
    tcap: Option<u32>,
}

/// Wedge-valued series.
pub type SeriesWedge = Series<Key>;

fn min_t_degree(p: &MultiPoly) -> u32 {
    p.terms().iter().map(|(m, _)| m.t_degree()).min().unwrap_or(0)
}

fn opt_add(c: Option<i32>, d: i32) -> Option<i32> {
    c.map(|c| c + d)
}

fn opt_min(a: Option<i32>, b: Option<i32>) -> Option<i32> {
    match (a, b) {
        (Some(x), Some(y)) => Some(x.min(y)),
        (x, y) => x.or(y),
    }
}

impl<K: Basis> Series<K> {
    /// The zero series with a t-degree cap.
    pub fn zero(tcap: Option<u32>) -> Self {
        Series { cells: BTreeMap::new(), zcap: None, wcap: None, tcap }
    }

    pub fn state(k: K, c: MultiPoly, tcap: Option<u32>) -> Self {
        let mut s = Self::zero(tcap);
        s.add_cell(0, 0, k, c);
        s
    }

    pub fn caps(&self) -> (Option<i32>, Option<i32>, Option<u32>) {
        (self.zcap, self.wcap, self.tcap)
    }

    /// Declares that only `z`-exponents up to `c` are wanted.
    pub fn with_zcap(mut self, c: i32) -> Self {
        self.zcap = opt_min(self.zcap, Some(c));
        self.trim();
        self
    }

    pub fn with_wcap(mut self, c: i32) -> Self {
        self.wcap = opt_min(self.wcap, Some(c));
        self.trim();
        self
    }

    fn trim(&mut self) {
        let (zc, wc) = (self.zcap, self.wcap);
        self.cells.retain(|&(a, b), _| zc.is_none_or(|c| a <= c) && wc.is_none_or(|c| b <= c));
    }

    pub fn add_cell(&mut self, a: i32, b: i32, k: K, c: MultiPoly) {
        if self.zcap.is_some_and(|z| a > z) || self.wcap.is_some_and(|w| b > w) {
            return;
        }
        let c = c.truncate_t(self.tcap);
        if c.is_zero() {
            return;
        }
        let cell = self.cells.entry((a, b)).or_default();
        let e = cell.entry(k).or_insert_with(MultiPoly::zero);
        e.add_assign(&c);
        if e.is_zero() {
            let k = cell.iter().find(|(_, v)| v.is_zero()).map(|(k, _)| k.clone()).unwrap();
            cell.remove(&k);
            if cell.is_empty() {
                self.cells.remove(&(a, b));
            }
        }
    }

    pub fn cells(&self) -> &BTreeMap<(i32, i32), BTreeMap<K, MultiPoly>> {
        &self.cells
    }

    pub fn is_zero(&self) -> bool {
        self.cells.is_empty()
    }

    /// The cell at `z^a w^b`; refused above a cap.
    pub fn cell(&self, a: i32, b: i32) -> Result<BTreeMap<K, MultiPoly>> {
        if self.zcap.is_some_and(|z| a > z) || self.wcap.is_some_and(|w| b > w) {
            return Err(Error::OutOfWindow {
                a,
                b,
                window: format!("z <= {:?}, w <= {:?}", self.zcap, self.wcap),
            });
        }
        Ok(self.cells.get(&(a, b)).cloned().unwrap_or_default())
    }

    /// Multiplies by `z^da w^db`.
    pub fn shift(&self, da: i32, db: i32) -> Self {
        let cells = self.cells.iter().map(|(&(a, b), v)| ((a + da, b + db), v.clone())).collect();
        Series { cells, zcap: opt_add(self.zcap, da), wcap: opt_add(self.wcap, db), tcap: self.tcap }
    }

    pub fn scale(&self, c: &MultiPoly) -> Self {
        self.mul_cells(&BTreeMap::from([((0, 0), c.clone())]))
    }

    /// Product with a scalar Laurent polynomial in `z`, `w`. Its omitted
    /// terms must have t-degree above the cap.
    pub fn mul_cells(&self, f: &BTreeMap<(i32, i32), MultiPoly>) -> Self {
        let amin = f.keys().map(|k| k.0).min().unwrap_or(0);
        let bmin = f.keys().map(|k| k.1).min().unwrap_or(0);
        let mut out = Series {
            cells: BTreeMap::new(),
            zcap: opt_add(self.zcap, amin),
            wcap: opt_add(self.wcap, bmin),
            tcap: self.tcap,
        };
        for (&(a, b), states) in &self.cells {
            for (&(fa, fb), fc) in f {
                for (k, c) in states {
                    out.add_cell(a + fa, b + fb, k.clone(), c.mul_trunc(fc, self.tcap));
                }
            }
        }
        out
    }

    pub fn add(&self, o: &Self) -> Self {
        let mut out = Series {
            cells: BTreeMap::new(),
            zcap: opt_min(self.zcap, o.zcap),
            wcap: opt_min(self.wcap, o.wcap),
            tcap: match (self.tcap, o.tcap) {
                (Some(x), Some(y)) => Some(x.min(y)),
                (x, y) => x.or(y),
            },
        };
        for src in [self, o] {
            for (&(a, b), states) in &src.cells {
                for (k, c) in states {
                    out.add_cell(a, b, k.clone(), c.clone());
                }
            }
        }
        out
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.scale(&MultiPoly::int(-1)))
    }

    /// `op(slot)` applied to every state.
    pub fn apply(&self, op: Op, slot: Slot) -> Result<Self> {
        let cap = match slot {
            Slot::Z => self.zcap,
            Slot::W => self.wcap,
            Slot::T(_) => None,
        };
        if !op.raises() {
            if cap.is_some() {
                return Err(Error::Truncation(format!("{op:?} on {slot:?} lowers a capped variable")));
            }
            if matches!(slot, Slot::T(_)) {
                return Err(Error::Invalid("lowering operators are not evaluated at t".into()));
            }
        }
        let mut out = Series { cells: BTreeMap::new(), zcap: self.zcap, wcap: self.wcap, tcap: self.tcap };
        for (&(a, b), states) in &self.cells {
            for (k, c) in states {
                let max = if !op.raises() {
                    None
                } else {
                    match slot {
                        Slot::Z => self.zcap.map(|z| (z - a) as u32),
                        Slot::W => self.wcap.map(|w| (w - b) as u32),
                        Slot::T(_) => self.tcap.map(|d| d.saturating_sub(min_t_degree(c))),
                    }
                };
                for (s, k2, q) in k.expand(op, max)? {
                    let q = Rational::from_int(q);
                    match slot {
                        Slot::Z => out.add_cell(a + s, b, k2, c.scale(&q)),
                        Slot::W => out.add_cell(a, b + s, k2, c.scale(&q)),
                        Slot::T(i) => {
                            let m = MultiPoly::term(Monomial::pow_of(Var::t(i), s as u16), q);
                            out.add_cell(a, b, k2, c.mul_trunc(&m, self.tcap));
                        }
                    }
                }
            }
        }
        Ok(out)
    }

    /// `op(t_1) ... op(t_r)`.
    pub fn apply_multi(&self, op: Op, r: usize) -> Result<Self> {
        let mut s = self.clone();
        for k in (1..=r).rev() {
            s = s.apply(op, Slot::T(k as u32))?;
        }
        Ok(s)
    }

    /// Applies a linear map state by state.
    pub fn map_states<K2: Basis>(&self, f: impl Fn(&K) -> Vec<(i32, i32, K2, MultiPoly)>) -> Series<K2> {
        let mut out = Series { cells: BTreeMap::new(), zcap: self.zcap, wcap: self.wcap, tcap: self.tcap };
        for (&(a, b), states) in &self.cells {
            for (k, c) in states {
                for (da, db, k2, q) in f(k) {
                    out.add_cell(a + da, b + db, k2, c.mul_trunc(&q, self.tcap));
                }
            }
        }
        out
    }

    /// First difference within the common caps, if any.
    pub fn difference(&self, o: &Self) -> Option<String> {
        let zc = opt_min(self.zcap, o.zcap);
        let wc = opt_min(self.wcap, o.wcap);
        let tc = match (self.tcap, o.tcap) {
            (Some(x), Some(y)) => Some(x.min(y)),
            (x, y) => x.or(y),
        };
        let mut keys: Vec<(i32, i32)> = self.cells.keys().chain(o.cells.keys()).copied().collect();
        keys.sort();
        keys.dedup();
        for (a, b) in keys {
            if zc.is_some_and(|c| a > c) || wc.is_some_and(|c| b > c) {
                continue;
            }
            let empty = BTreeMap::new();
            let x = self.cells.get(&(a, b)).unwrap_or(&empty);
            let y = o.cells.get(&(a, b)).unwrap_or(&empty);
            let mut ks: Vec<&K> = x.keys().chain(y.keys()).collect();
            ks.sort();
            ks.dedup();
            for k in ks {
                let p = x.get(k).cloned().unwrap_or_default().truncate_t(tc);
                let q = y.get(k).cloned().unwrap_or_default().truncate_t(tc);
                if p != q {
                    return Some(format!("z^{a} w^{b} {k:?}: {p} vs {q}"));
                }
            }
        }
        None
    }
}

impl<K: Basis> fmt::Debug for Series<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Series (z <= {:?}, w <= {:?}, t-degree <= {:?})", self.zcap, self.wcap, self.tcap)?;
        for ((a, b), states) in &self.cells {
            for (k, c) in states {
                writeln!(f, "  z^{a} w^{b} {k:?}: {c}")?;
            }
        }
        Ok(())
    }
}

impl SeriesWedge {
    pub fn from_wedge<S: Scalar + Into<MultiPoly>>(u: &Wedge<S>, tcap: Option<u32>) -> Self {
        let mut s = Self::zero(tcap);
        for (k, c) in u.terms() {
            s.add_cell(0, 0, k.clone(), c.clone().into());
        }
        s
    }

    /// `sum_i X^i z^i` up to `z^cap`.
    pub fn generating_vector(cap: i32, tcap: Option<u32>) -> Self {
        let mut s = Self::zero(tcap).with_zcap(cap);
        for i in 0..=cap {
            s.add_cell(i, 0, Key::from_slice(&[i]), MultiPoly::one());
        }
        s
    }

    /// The wedge in one cell.
    pub fn wedge_at(&self, a: i32, b: i32, degree: usize) -> Result<Wedge<MultiPoly>> {
        let mut w = Wedge::zero(degree);
        for (k, c) in self.cell(a, b)? {
            w.add_term(k, c);
        }
        Ok(w)
    }

    /// Cellwise wedge product.
    pub fn wedge(&self, o: &Self) -> Self {
        let zmin = |s: &Self| s.cells.keys().map(|k| k.0).min().unwrap_or(0);
        let wmin = |s: &Self| s.cells.keys().map(|k| k.1).min().unwrap_or(0);
        let zcap = opt_min(opt_add(self.zcap, zmin(o)), opt_add(o.zcap, zmin(self)));
        let wcap = opt_min(opt_add(self.wcap, wmin(o)), opt_add(o.wcap, wmin(self)));
        let tcap = match (self.tcap, o.tcap) {
            (Some(x), Some(y)) => Some(x.min(y)),
            (x, y) => x.or(y),
        };
        let mut out = Series { cells: BTreeMap::new(), zcap, wcap, tcap };
        let mut buf = Vec::new();
        for (&(a1, b1), s1) in &self.cells {
            for (&(a2, b2), s2) in &o.cells {
                for (k1, c1) in s1 {
                    for (k2, c2) in s2 {
                        buf.clear();
                        buf.extend_from_slice(k1);
                        buf.extend_from_slice(k2);
                        let mut k: Key = buf.iter().copied().collect();
                        if let Some(odd) = sort_sign(&mut k) {
                            let c = c1.mul_trunc(c2, tcap);
                            out.add_cell(a1 + a2, b1 + b2, k, if odd { c.neg() } else { c });
                        }
                    }
                }
            }
        }
        out
    }

    /// `d^j _|` on every cell.
    pub fn contract(&self, j: i32) -> Self {
        self.map_states(|k| {
            k.iter()
                .position(|&e| e == j)
                .map(|pos| {
                    let mut rest = k.clone();
                    rest.remove(pos);
                    let sign = if pos % 2 == 1 { -1 } else { 1 };
                    vec![(0, 0, rest, MultiPoly::int(sign))]
                })
                .unwrap_or_default()
        })
    }

    /// `d(w^-1) _| = sum_j w^-j d^j _|`.
    pub fn contract_generating(&self) -> Result<Self> {
        if self.wcap.is_some() {
            return Err(Error::Truncation("contraction series lowers a capped w".into()));
        }
        Ok(self.map_states(|k| {
            (0..k.len())
                .map(|pos| {
                    let mut rest = k.clone();
                    let e = rest.remove(pos);
                    let sign = if pos % 2 == 1 { -1 } else { 1 };
                    (0, -e, rest, MultiPoly::int(sign))
                })
                .collect()
        }))
    }
}

impl From<Rational> for MultiPoly {
    fn from(q: Rational) -> Self {
        MultiPoly::constant(q)
    }
}

/// `sigma_i u` for `Op::Plus`, or `sigma-bar_i u = (-1)^i [z^i] sigma-bar_+(z) u`
/// for `Op::BarPlus`.
pub fn sigma_coeff<S: Scalar>(op: Op, i: u32, u: &Wedge<S>) -> Result<Wedge<S>> {
    if !op.raises() {
        return Err(Error::Invalid("coefficient operators are taken from sigma_+ or sigma-bar_+".into()));
    }
    let mut out = Wedge::zero(u.degree());
    let sign_bar = op == Op::BarPlus && i % 2 == 1;
    for (k, c) in u.terms() {
        for (s, k2, q) in expand_factors(op, k, 0, Some(i))? {
            if s == i as i32 {
                let q = if sign_bar { -q } else { q };
                out.add_term(k2, c.times(&S::from_int(q)));
            }
        }
    }
    Ok(out)
}

/// `sigma_-(z)^T d^j = sum_{i <= depth} d^(j+i) z^-i`, as `(z-exponent, index)`.
pub fn sigma_minus_transpose(j: i32, depth: u32) -> Vec<(i32, i32)> {
    (0..=depth as i32).map(|i| (-i, j + i)).collect()
}

/// `D_lambda(sigma_+) X^r(0)` with the operator coefficients `sigma_i`.
pub fn giambelli(lambda: &Partition, r: usize) -> Result<Wedge<Rational>> {
    let l = lambda.len();
    let base: Wedge<Rational> = Wedge::basis(&Partition::empty(), r);
    if l > r {
        return Err(Error::Invalid(format!("({lambda}) has more than {r} parts")));
    }
    let mut acc = Wedge::zero(r);
    for (perm, odd) in permutations(l) {
        // entry (i, j) = sigma_{lambda_j - j + i}; row i uses column perm[i]
        let mut u = base.clone();
        let mut dead = false;
        for (i, &j) in perm.iter().enumerate() {
            let k = lambda.part(j + 1) as i64 - (j + 1) as i64 + (i + 1) as i64;
            if k < 0 {
                dead = true;
                break;
            }
            u = sigma_coeff(Op::Plus, k as u32, &u)?;
        }
        if !dead {
            acc.add_assign(&if odd { u.neg() } else { u });
        }
    }
    Ok(acc)
}

/// All permutations of `0..n` with their parity.
pub fn permutations(n: usize) -> Vec<(Vec<usize>, bool)> {
    let mut out = Vec::new();
    let mut cur: Vec<usize> = (0..n).collect();
    fn heap(k: usize, cur: &mut Vec<usize>, odd: bool, out: &mut Vec<(Vec<usize>, bool)>) -> bool {
        // returns the parity after visiting; Heap's algorithm flips on each swap
        if k <= 1 {
            out.push((cur.clone(), odd));
            return odd;
        }
        let mut odd = odd;
        for i in 0..k {
            odd = heap(k - 1, cur, odd, out);
            if i + 1 < k {
                if k.is_multiple_of(2) {
                    cur.swap(i, k - 1);
                } else {
                    cur.swap(0, k - 1);
                }
                odd = !odd;
            }
        }
        odd
    }
    heap(n, &mut cur, false, &mut out);
    out
}

/// Univariate Laurent polynomial in `z` with polynomial coefficients.
pub type ZPoly = BTreeMap<i32, MultiPoly>;

fn zpoly_mul(a: &ZPoly, b: &ZPoly) -> ZPoly {
    let mut out = ZPoly::new();
    for (i, p) in a {
        for (j, q) in b {
            let e = out.entry(i + j).or_insert_with(MultiPoly::zero);
            e.add_assign(&p.mul(q));
        }
    }
    out.retain(|_, p| !p.is_zero());
    out
}

/// `sigma_-(z) f` or `sigma-bar_-(z) f` for `f` in `B_r`, through
/// `sigma D_lambda(H_r) = D_lambda(sigma H_r)`.
pub fn sigma_on_br(op: Op, f: &MultiPoly, r: usize) -> Result<ZPoly> {
    let entry = |k: i64| -> ZPoly {
        let mut z = ZPoly::new();
        match op {
            Op::Minus => {
                for i in 0..=k.max(-1) {
                    z.insert(-(i as i32), br::h_of(k - i, r));
                }
            }
            _ => {
                z.insert(0, br::h_of(k, r));
                z.insert(-1, br::h_of(k - 1, r).neg());
            }
        }
        z.retain(|_, p| !p.is_zero());
        z
    };
    if !matches!(op, Op::Minus | Op::BarMinus) {
        return Err(Error::Invalid("only sigma_- and sigma-bar_- act on B_r this way".into()));
    }
    let mut acc = ZPoly::new();
    for (lambda, c) in br::to_delta_basis_coeffs(f, r)? {
        let l = lambda.len();
        for (perm, odd) in permutations(l) {
            let mut prod = ZPoly::from([(0, MultiPoly::one())]);
            for (i, &j) in perm.iter().enumerate() {
                let k = lambda.part(j + 1) as i64 - (j + 1) as i64 + (i + 1) as i64;
                prod = zpoly_mul(&prod, &entry(k));
            }
            let sc = if odd { c.neg() } else { c.clone() };
            for (e, p) in prod {
                acc.entry(e).or_insert_with(MultiPoly::zero).add_assign(&p.mul(&sc));
            }
        }
    }
    acc.retain(|_, p| !p.is_zero());
    Ok(acc)
}

/// The module identification `wedge^r V -> B_r`, `X^r(mu) -> D_mu(H_r)`.
pub fn wedge_to_br<S: Scalar + Into<MultiPoly>>(u: &Wedge<S>) -> MultiPoly {
    let r = u.degree();
    let mut acc = MultiPoly::zero();
    for (mu, c) in u.to_partitions() {
        acc.add_assign(&schur_delta(&mu, r).mul(&c.into()));
    }
    acc
}

/// The inverse identification; non-`e` variables stay in the coefficients.
pub fn br_to_wedge(f: &MultiPoly, r: usize) -> Result<Wedge<MultiPoly>> {
    let c = br::to_delta_basis_coeffs(f, r)?;
    Ok(Wedge::from_partitions(&c, r))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn part(s: &str) -> Partition {
        s.parse().unwrap()
    }

    fn k(v: &[i32]) -> Key {
        Key::from_slice(v)
    }

    fn one_cell(s: &SeriesWedge, a: i32) -> Vec<(Key, MultiPoly)> {
        s.cell(a, 0).unwrap().into_iter().collect()
    }

    #[test]
    fn bar_plus_on_vector() {
        let s = SeriesWedge::state(k(&[3]), MultiPoly::one(), None).apply(Op::BarPlus, Slot::Z).unwrap();
        assert_eq!(one_cell(&s, 0), vec![(k(&[3]), MultiPoly::one())]);
        assert_eq!(one_cell(&s, 1), vec![(k(&[4]), MultiPoly::int(-1))]);
    }

    #[test]
    fn plus_on_vacuum_two() {
        let s = SeriesWedge::state(k(&[1, 0]), MultiPoly::one(), None).with_zcap(2).apply(Op::Plus, Slot::Z).unwrap();
        assert_eq!(one_cell(&s, 1), vec![(k(&[2, 0]), MultiPoly::one())]);
        let c2 = one_cell(&s, 2);
        assert_eq!(c2, vec![(k(&[3, 0]), MultiPoly::one())]);
    }

    #[test]
    fn minus_examples() {
        let s = SeriesWedge::state(k(&[0]), MultiPoly::one(), None).apply(Op::Minus, Slot::Z).unwrap();
        assert_eq!(s.cells().len(), 1);
        let s = SeriesWedge::state(k(&[2]), MultiPoly::one(), None).apply(Op::BarMinus, Slot::Z).unwrap();
        assert_eq!(one_cell(&s, -1), vec![(k(&[1]), MultiPoly::int(-1))]);
        assert!(SeriesWedge::state(k(&[2]), MultiPoly::one(), None).with_zcap(3).apply(Op::Minus, Slot::Z).is_err());
    }

    #[test]
    fn giambelli_small() {
        for (l, r) in [("1", 2), ("1,1", 2), ("-", 2), ("2,1", 3)] {
            assert_eq!(giambelli(&part(l), r).unwrap(), Wedge::basis(&part(l), r), "{l} at {r}");
        }
    }

    #[test]
    fn permutation_parity() {
        let ps = permutations(3);
        assert_eq!(ps.len(), 6);
        for (p, odd) in ps {
            let inv = (0..3).flat_map(|i| (i + 1..3).map(move |j| (i, j))).filter(|&(i, j)| p[i] > p[j]).count();
            assert_eq!(inv % 2 == 1, odd, "{p:?}");
        }
    }

    #[test]
    fn sigma_on_h() {
        let r = 3;
        let m = sigma_on_br(Op::Minus, &br::h_of(2, r), r).unwrap();
        assert_eq!(m, ZPoly::from([(0, br::h_of(2, r)), (-1, br::h_of(1, r)), (-2, MultiPoly::one())]));
        let b = sigma_on_br(Op::BarMinus, &br::h_of(1, r), r).unwrap();
        assert_eq!(b, ZPoly::from([(0, br::h_of(1, r)), (-1, MultiPoly::int(-1))]));
    }
}
