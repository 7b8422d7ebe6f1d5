//! Windowed bivariate Laurent series in `z`, `w` with polynomial coefficients.
//!
//! A series is exact on a declared box of `(z-exp, w-exp)` cells and up to a
//! t-degree cap. To decide which product cells are exact, every series also
//! carries a [`Support`]: lower bounds, valid for the whole untruncated
//! series, on the z-exponent `a`, the w-exponent `b` and their sum `a + b`.
//! Each bound is affine in the t-degree `d` of the coefficient, `c - slope*d`.
//!
//! The sum bound is what keeps products exact when one factor is unbounded
//! along both axes, e.g. `1/(1 - w/z) = sum (w/z)^k` lives on the line
//! `a + b = 0`. Bounds on one slice alone could not certify anything there.
//!
//! For a product cell `(a, b)` and a t-degree split `d1 + d2`, the pairs that
//! can contribute satisfy six linear constraints, a hexagon in the plane of
//! the first factor's exponents. The cell is exact when that hexagon's
//! bounding box lies inside the first factor's box, the mirrored box lies
//! inside the second's, and this holds for every split. The bounding box grows
//! monotonically with `(a, b)`, so a whole rectangle is certified by its upper
//! corner alone.

use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::poly::MultiPoly;
use crate::series::PowerSeries;

/// Lower bound `c - slope*d` on an exponent form, `d` the t-degree.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Affine {
    pub c: i64,
    pub slope: i64,
}

impl Affine {
    pub const fn new(c: i64, slope: i64) -> Self {
        Affine { c, slope }
    }

    pub const fn constant(c: i64) -> Self {
        Affine { c, slope: 0 }
    }

    pub fn at(self, d: u32) -> i64 {
        self.c - self.slope * d as i64
    }
}

/// Lower bounds on `a`, `b`, `a + b`; `None` means unbounded below.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Support {
    pub a: Option<Affine>,
    pub b: Option<Affine>,
    pub s: Option<Affine>,
}

fn combine(x: Option<Affine>, y: Option<Affine>) -> Option<Affine> {
    Some(Affine { c: x?.c + y?.c, slope: x?.slope.max(y?.slope) })
}

fn weaker(x: Option<Affine>, y: Option<Affine>) -> Option<Affine> {
    let (x, y) = (x?, y?);
    Some(Affine { c: x.c.min(y.c), slope: x.slope.max(y.slope) })
}

impl Support {
    pub const fn new(a: Option<Affine>, b: Option<Affine>, s: Option<Affine>) -> Self {
        Support { a, b, s }
    }

    /// Support of a single cell `z^a w^b`.
    pub fn point(a: i32, b: i32) -> Self {
        let (a, b) = (a as i64, b as i64);
        Support::new(Some(Affine::constant(a)), Some(Affine::constant(b)), Some(Affine::constant(a + b)))
    }

    /// Support of the product of two series.
    pub fn mul(&self, o: &Support) -> Support {
        // min over d1 + d2 = d of (c1 - s1 d1) + (c2 - s2 d2) is c1 + c2 - max(s1, s2) d.
        Support::new(combine(self.a, o.a), combine(self.b, o.b), combine(self.s, o.s))
    }

    /// Support valid for both; used by sums.
    pub fn union(&self, o: &Support) -> Support {
        Support::new(weaker(self.a, o.a), weaker(self.b, o.b), weaker(self.s, o.s))
    }

    fn has_slope(&self) -> bool {
        [self.a, self.b, self.s].iter().flatten().any(|x| x.slope != 0)
    }
}

/// Box of exponent cells plus a t-degree cap (`None`: exact in every degree).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Window {
    pub zlo: i32,
    pub zhi: i32,
    pub wlo: i32,
    pub whi: i32,
    pub tcap: Option<u32>,
}

impl Window {
    pub fn new(zlo: i32, zhi: i32, wlo: i32, whi: i32, tcap: Option<u32>) -> Self {
        Window { zlo, zhi, wlo, whi, tcap }
    }

    pub fn is_empty(&self) -> bool {
        self.zlo > self.zhi || self.wlo > self.whi
    }

    pub fn contains(&self, a: i32, b: i32) -> bool {
        a >= self.zlo && a <= self.zhi && b >= self.wlo && b <= self.whi
    }

    pub fn cells(&self) -> Vec<(i32, i32)> {
        let mut v = Vec::new();
        for a in self.zlo..=self.zhi {
            for b in self.wlo..=self.whi {
                v.push((a, b));
            }
        }
        v
    }

    pub fn area(&self) -> i64 {
        if self.is_empty() {
            0
        } else {
            (self.zhi - self.zlo + 1) as i64 * (self.whi - self.wlo + 1) as i64
        }
    }
}

impl fmt::Display for Window {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "z in [{}, {}], w in [{}, {}]", self.zlo, self.zhi, self.wlo, self.whi)?;
        match self.tcap {
            Some(d) => write!(f, ", t-degree <= {d}"),
            None => Ok(()),
        }
    }
}

/// Exponent requirement on one factor; `None` ends are unbounded.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Need {
    pub zlo: Option<i64>,
    pub zhi: Option<i64>,
    pub wlo: Option<i64>,
    pub whi: Option<i64>,
}

impl Need {
    fn empty() -> Self {
        Need { zlo: Some(i64::MAX), zhi: Some(i64::MIN), wlo: Some(i64::MAX), whi: Some(i64::MIN) }
    }

    fn is_empty(&self) -> bool {
        matches!((self.zlo, self.zhi), (Some(l), Some(h)) if l > h)
            || matches!((self.wlo, self.whi), (Some(l), Some(h)) if l > h)
    }

    fn hull(&mut self, o: &Need) {
        let lo = |x: Option<i64>, y: Option<i64>| Some(x?.min(y?));
        let hi = |x: Option<i64>, y: Option<i64>| Some(x?.max(y?));
        self.zlo = lo(self.zlo, o.zlo);
        self.wlo = lo(self.wlo, o.wlo);
        self.zhi = hi(self.zhi, o.zhi);
        self.whi = hi(self.whi, o.whi);
    }

    /// The requirement as a finite box, if it is one.
    pub fn as_window(&self, tcap: Option<u32>) -> Option<Window> {
        if self.is_empty() {
            return Some(Window::new(0, -1, 0, -1, tcap));
        }
        let c = |x: Option<i64>| x.and_then(|v| i32::try_from(v).ok());
        Some(Window::new(c(self.zlo)?, c(self.zhi)?, c(self.wlo)?, c(self.whi)?, tcap))
    }
}

impl fmt::Display for Need {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = |x: Option<i64>, inf: &str| x.map_or(inf.to_string(), |v| v.to_string());
        write!(
            f,
            "z in [{}, {}], w in [{}, {}]",
            s(self.zlo, "-inf"),
            s(self.zhi, "+inf"),
            s(self.wlo, "-inf"),
            s(self.whi, "+inf")
        )
    }
}

fn opt_max(xs: &[Option<i64>]) -> Option<i64> {
    // Lower bounds: the tightest available one; all missing means unbounded.
    xs.iter().flatten().copied().max()
}

fn opt_min(xs: &[Option<i64>]) -> Option<i64> {
    xs.iter().flatten().copied().min()
}

fn sub(x: Option<i64>, y: Option<i64>) -> Option<i64> {
    Some(x? - y?)
}

fn ev(x: Option<Affine>, d: u32) -> Option<i64> {
    x.map(|f| f.at(d))
}

fn tmax(tcap: Option<u32>, sups: &[&Support]) -> Result<u32> {
    match tcap {
        Some(d) => Ok(d),
        None if sups.iter().any(|s| s.has_slope()) => Err(Error::Window(
            "a t-degree cap is required when a factor's support depends on t-degree".into(),
        )),
        None => Ok(0),
    }
}

/// Exponents of the first factor that can reach product cells with
/// `a <= a_hi`, `b <= b_hi`, at t-degree at most `dmax`.
pub fn needed_box(first: &Support, second: &Support, a_hi: i64, b_hi: i64, dmax: u32) -> Need {
    let mut need = Need::empty();
    for d1 in 0..=dmax {
        for d2 in 0..=(dmax - d1) {
            let (la1, lb1, ls1) = (ev(first.a, d1), ev(first.b, d1), ev(first.s, d1));
            let (la2, lb2, ls2) = (ev(second.a, d2), ev(second.b, d2), ev(second.s, d2));
            let s_hi = sub(Some(a_hi + b_hi), ls2);
            let b1_max = sub(Some(b_hi), lb2);
            let a1_max = sub(Some(a_hi), la2);
            let n = Need {
                zlo: opt_max(&[la1, sub(ls1, b1_max)]),
                zhi: opt_min(&[a1_max, sub(s_hi, lb1)]),
                wlo: opt_max(&[lb1, sub(ls1, a1_max)]),
                whi: opt_min(&[b1_max, sub(s_hi, la1)]),
            };
            if n.is_empty() {
                continue;
            }
            if need.is_empty() {
                need = n;
            } else {
                need.hull(&n);
            }
        }
    }
    need
}

/// Exact-on-a-window bivariate Laurent series.
#[derive(Clone, PartialEq, Eq)]
pub struct LaurentSeries {
    window: Window,
    complete: bool,
    support: Support,
    cells: BTreeMap<(i32, i32), MultiPoly>,
}

impl LaurentSeries {
    /// A series whose every nonzero coefficient is listed; exact everywhere.
    pub fn from_cells(cells: impl IntoIterator<Item = ((i32, i32), MultiPoly)>) -> Self {
        let mut map: BTreeMap<(i32, i32), MultiPoly> = BTreeMap::new();
        for (k, p) in cells {
            map.entry(k).or_insert_with(MultiPoly::zero).add_assign(&p);
        }
        map.retain(|_, p| !p.is_zero());
        let support = if map.is_empty() {
            Support::point(0, 0)
        } else {
            let amin = map.keys().map(|k| k.0).min().unwrap() as i64;
            let bmin = map.keys().map(|k| k.1).min().unwrap() as i64;
            let smin = map.keys().map(|k| k.0 + k.1).min().unwrap() as i64;
            Support::new(Some(Affine::constant(amin)), Some(Affine::constant(bmin)), Some(Affine::constant(smin)))
        };
        let window = bounding(&map);
        LaurentSeries { window, complete: true, support, cells: map }
    }

    pub fn one() -> Self {
        Self::monomial(0, 0, MultiPoly::one())
    }

    pub fn monomial(a: i32, b: i32, c: MultiPoly) -> Self {
        Self::from_cells([((a, b), c)])
    }

    /// A series known only on `window`, with the caller vouching for `support`.
    pub fn windowed(
        window: Window,
        support: Support,
        cells: impl IntoIterator<Item = ((i32, i32), MultiPoly)>,
    ) -> Self {
        let mut map = BTreeMap::new();
        for ((a, b), p) in cells {
            if window.contains(a, b) {
                let p = p.truncate_t(window.tcap);
                map.entry((a, b)).or_insert_with(MultiPoly::zero).add_assign(&p);
            }
        }
        map.retain(|_, p| !p.is_zero());
        LaurentSeries { window, complete: false, support, cells: map }
    }

    /// Places `c_k` of a univariate series at `k*dir`. With `tgrade = 1` the
    /// coefficient `c_k` has t-degree at least `k`; with `tgrade = 0` it is
    /// unconstrained. The series must reach [`ray_order`].
    pub fn ray(series: &PowerSeries, dir: (i32, i32), tgrade: u32, window: Window) -> Result<Self> {
        let need = ray_order(dir, tgrade, &window)?;
        if series.order() < need {
            return Err(Error::Window(format!(
                "ray along {dir:?} needs order {need}, the series has {}",
                series.order()
            )));
        }
        let support = ray_support(dir, tgrade)?;
        let cells = (0..=need.min(series.order()))
            .map(|k| ((k as i32 * dir.0, k as i32 * dir.1), series.coeff(k).clone()));
        Ok(Self::windowed(window, support, cells))
    }

    pub fn window(&self) -> Window {
        self.window
    }

    pub fn support(&self) -> Support {
        self.support
    }

    pub fn is_complete(&self) -> bool {
        self.complete
    }

    pub fn cells(&self) -> &BTreeMap<(i32, i32), MultiPoly> {
        &self.cells
    }

    /// Exact coefficient of `z^a w^b`; rejected outside the sound window.
    pub fn coefficient(&self, a: i32, b: i32) -> Result<MultiPoly> {
        if !self.complete && !self.window.contains(a, b) {
            return Err(Error::OutOfWindow { a, b, window: self.window.to_string() });
        }
        Ok(self.cells.get(&(a, b)).cloned().unwrap_or_default())
    }

    fn covers(&self, need: &Need, dmax: u32, tcap: Option<u32>) -> bool {
        if need.is_empty() {
            return true;
        }
        let t_ok = match (self.window.tcap, tcap) {
            (None, _) => true,
            (Some(c), Some(_)) => c >= dmax,
            (Some(_), None) => false,
        };
        if self.complete {
            return t_ok;
        }
        let ge = |x: Option<i64>, lim: i32| x.is_some_and(|v| v >= lim as i64);
        let le = |x: Option<i64>, lim: i32| x.is_some_and(|v| v <= lim as i64);
        t_ok
            && ge(need.zlo, self.window.zlo)
            && le(need.zhi, self.window.zhi)
            && ge(need.wlo, self.window.wlo)
            && le(need.whi, self.window.whi)
    }

    /// Product computed on `target`, after certifying that every target cell
    /// is exact. Fails with the required factor boxes otherwise.
    pub fn mul_to(&self, other: &Self, target: Window) -> Result<Self> {
        let support = self.support.mul(&other.support);
        if target.is_empty() {
            return Ok(LaurentSeries { window: target, complete: false, support, cells: BTreeMap::new() });
        }
        let dmax = tmax(target.tcap, &[&self.support, &other.support])?;
        let (ah, bh) = (target.zhi as i64, target.whi as i64);
        let n1 = needed_box(&self.support, &other.support, ah, bh, dmax);
        let n2 = needed_box(&other.support, &self.support, ah, bh, dmax);
        if !self.covers(&n1, dmax, target.tcap) || !other.covers(&n2, dmax, target.tcap) {
            return Err(Error::Window(format!(
                "target {target} needs first factor on {n1} (has {}) and second on {n2} (has {})",
                self.describe(),
                other.describe()
            )));
        }
        let cells = product_cells(self, other, &target);
        Ok(LaurentSeries { window: target, complete: false, support, cells })
    }

    /// Product on the largest window where it is provably exact.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        if self.complete && other.complete {
            let tcap = None;
            let full = Window::new(
                self.window.zlo + other.window.zlo,
                self.window.zhi + other.window.zhi,
                self.window.wlo + other.window.wlo,
                self.window.whi + other.window.whi,
                tcap,
            );
            let cells = product_cells(self, other, &full);
            let mut out = Self::from_cells(cells);
            out.support = self.support.mul(&other.support);
            return Ok(out);
        }
        let tcap = match (self.window.tcap, other.window.tcap) {
            (Some(a), Some(b)) => Some(a.min(b)),
            (a, b) => a.or(b),
        };
        let dmax = tmax(tcap, &[&self.support, &other.support])?;
        // Cells below the product's support are zero and carry no information.
        let psup = self.support.mul(&other.support);
        let clip = |lo: i32, f: Option<Affine>| f.map_or(lo, |f| lo.max(f.at(dmax) as i32));
        let region = Window::new(
            clip(self.window.zlo + other.window.zlo, psup.a),
            self.window.zhi + other.window.zhi,
            clip(self.window.wlo + other.window.wlo, psup.b),
            self.window.whi + other.window.whi,
            tcap,
        );
        let mut best: Option<Window> = None;
        for ah in region.zlo..=region.zhi {
            for bh in region.wlo..=region.whi {
                let n1 = needed_box(&self.support, &other.support, ah as i64, bh as i64, dmax);
                let n2 = needed_box(&other.support, &self.support, ah as i64, bh as i64, dmax);
                if !self.covers(&n1, dmax, tcap) || !other.covers(&n2, dmax, tcap) {
                    continue;
                }
                let cand = Window::new(region.zlo, ah, region.wlo, bh, tcap);
                let better = match &best {
                    None => true,
                    Some(b) => (cand.area(), cand.zhi, cand.whi) > (b.area(), b.zhi, b.whi),
                };
                if better {
                    best = Some(cand);
                }
            }
        }
        match best {
            Some(w) => self.mul_to(other, w),
            None => {
                let n1 = needed_box(&self.support, &other.support, region.zlo as i64, region.wlo as i64, dmax);
                let n2 = needed_box(&other.support, &self.support, region.zlo as i64, region.wlo as i64, dmax);
                Err(Error::Window(format!(
                    "no exact cell in {region}; even its lowest corner needs the first factor on {n1} and the second on {n2}"
                )))
            }
        }
    }

    /// Sum on the intersection of both windows.
    pub fn add(&self, other: &Self) -> Self {
        let mut cells = self.cells.clone();
        for (k, p) in &other.cells {
            cells.entry(*k).or_insert_with(MultiPoly::zero).add_assign(p);
        }
        cells.retain(|_, p| !p.is_zero());
        if self.complete && other.complete {
            let mut out = Self::from_cells(cells);
            out.support = self.support.union(&other.support);
            return out;
        }
        let w = intersect(self, other);
        let support = self.support.union(&other.support);
        Self::windowed(w, support, cells)
    }

    pub fn scale(&self, c: &MultiPoly) -> Self {
        let mut out = self.clone();
        out.cells = self
            .cells
            .iter()
            .map(|(k, p)| (*k, p.mul_trunc(c, self.window.tcap)))
            .filter(|(_, p)| !p.is_zero())
            .collect();
        out
    }

    /// Restricts to a sub-window of the sound one.
    pub fn restrict(&self, w: Window) -> Result<Self> {
        if !w.is_empty() && !self.complete {
            let inside = w.zlo >= self.window.zlo
                && w.zhi <= self.window.zhi
                && w.wlo >= self.window.wlo
                && w.whi <= self.window.whi;
            if !inside {
                return Err(Error::OutOfWindow { a: w.zhi, b: w.whi, window: self.window.to_string() });
            }
        }
        Ok(Self::windowed(w, self.support, self.cells.iter().map(|(k, p)| (*k, p.clone()))))
    }

    fn describe(&self) -> String {
        if self.complete {
            "every cell".into()
        } else {
            self.window.to_string()
        }
    }
}

type Builder<'a> = Box<dyn Fn(Window) -> Result<LaurentSeries> + Sync + 'a>;

/// One factor of a planned product: its support, known up front, and a way
/// to materialize it on any window.
pub struct Factor<'a> {
    support: Support,
    build: Builder<'a>,
}

impl<'a> Factor<'a> {
    /// A fixed series, used as is on every window.
    pub fn fixed(s: LaurentSeries) -> Self {
        let support = s.support;
        Factor { support, build: Box::new(move |_| Ok(s.clone())) }
    }

    /// A univariate series laid along `dir`; `series(order)` must return at
    /// least `order` terms.
    pub fn ray(dir: (i32, i32), tgrade: u32, series: impl Fn(usize) -> Result<PowerSeries> + Sync + 'a) -> Result<Self> {
        let support = ray_support(dir, tgrade)?;
        let build = move |w: Window| {
            let order = ray_order(dir, tgrade, &w)?;
            LaurentSeries::ray(&series(order)?, dir, tgrade, w)
        };
        Ok(Factor { support, build: Box::new(build) })
    }

    pub fn support(&self) -> Support {
        self.support
    }
}

/// Multiplies `factors` left to right, sizing every intermediate window from
/// the supports so that the result is exact on `target`.
pub fn product_to(factors: &[Factor<'_>], target: Window) -> Result<LaurentSeries> {
    let Some((last, rest)) = factors.split_last() else {
        return LaurentSeries::one().restrict(target);
    };
    if rest.is_empty() {
        return (last.build)(target);
    }
    let rest_sup = rest.iter().skip(1).fold(rest[0].support, |acc, f| acc.mul(&f.support));
    let dmax = tmax(target.tcap, &[&rest_sup, &last.support])?;
    let (ah, bh) = (target.zhi as i64, target.whi as i64);
    let n1 = needed_box(&rest_sup, &last.support, ah, bh, dmax);
    let n2 = needed_box(&last.support, &rest_sup, ah, bh, dmax);
    let unbounded = |n: &Need| Error::Window(format!("target {target} needs an unbounded box {n}"));
    let w1 = n1.as_window(target.tcap).ok_or_else(|| unbounded(&n1))?;
    let w2 = n2.as_window(target.tcap).ok_or_else(|| unbounded(&n2))?;
    let left = product_to(rest, w1)?;
    let right = (last.build)(w2)?;
    left.mul_to(&right, target)
}

fn intersect(a: &LaurentSeries, b: &LaurentSeries) -> Window {
    match (a.complete, b.complete) {
        (true, false) => b.window,
        (false, true) => a.window,
        _ => {
            let tcap = match (a.window.tcap, b.window.tcap) {
                (Some(x), Some(y)) => Some(x.min(y)),
                (x, y) => x.or(y),
            };
            Window::new(
                a.window.zlo.max(b.window.zlo),
                a.window.zhi.min(b.window.zhi),
                a.window.wlo.max(b.window.wlo),
                a.window.whi.min(b.window.whi),
                tcap,
            )
        }
    }
}

fn bounding(map: &BTreeMap<(i32, i32), MultiPoly>) -> Window {
    if map.is_empty() {
        return Window::new(0, 0, 0, 0, None);
    }
    let zlo = map.keys().map(|k| k.0).min().unwrap();
    let zhi = map.keys().map(|k| k.0).max().unwrap();
    let wlo = map.keys().map(|k| k.1).min().unwrap();
    let whi = map.keys().map(|k| k.1).max().unwrap();
    Window::new(zlo, zhi, wlo, whi, None)
}

fn cell_product(x: &LaurentSeries, y: &LaurentSeries, a: i32, b: i32, tcap: Option<u32>) -> MultiPoly {
    let mut acc = MultiPoly::zero();
    for (&(a1, b1), p) in &x.cells {
        if let Some(q) = y.cells.get(&(a - a1, b - b1)) {
            acc.add_assign(&p.mul_trunc(q, tcap));
        }
    }
    acc
}

fn product_cells(x: &LaurentSeries, y: &LaurentSeries, target: &Window) -> BTreeMap<(i32, i32), MultiPoly> {
    let cells = target.cells();
    let tcap = target.tcap;
    let run = |&(a, b): &(i32, i32)| ((a, b), cell_product(x, y, a, b, tcap));
    #[cfg(feature = "parallel")]
    let out: Vec<_> = {
        use rayon::prelude::*;
        cells.par_iter().map(run).collect()
    };
    #[cfg(not(feature = "parallel"))]
    let out: Vec<_> = cells.iter().map(run).collect();
    out.into_iter().filter(|(_, p)| !p.is_zero()).collect()
}

/// Largest `k` with `k*dir` inside the window (and `k <= tcap` when graded).
pub fn ray_order(dir: (i32, i32), tgrade: u32, window: &Window) -> Result<usize> {
    if window.is_empty() {
        return Ok(0);
    }
    let mut bound: Option<i64> = None;
    let mut tighten = |x: i64| bound = Some(bound.map_or(x, |b| b.min(x)));
    for (d, lo, hi) in [(dir.0, window.zlo, window.zhi), (dir.1, window.wlo, window.whi)] {
        let (d, lo, hi) = (d as i64, lo as i64, hi as i64);
        if d > 0 {
            tighten(if hi < 0 { 0 } else { hi / d });
        } else if d < 0 {
            tighten(if lo > 0 { 0 } else { lo / d });
        }
    }
    if tgrade > 0 {
        if let Some(c) = window.tcap {
            tighten((c / tgrade) as i64);
        }
    }
    match bound {
        Some(b) => Ok(b.max(0) as usize),
        None => Err(Error::Window(format!("ray along {dir:?} is unbounded inside {window}"))),
    }
}

fn ray_support(dir: (i32, i32), tgrade: u32) -> Result<Support> {
    let form = |d: i32| -> Option<Affine> {
        if d >= 0 {
            Some(Affine::constant(0))
        } else if tgrade == 1 {
            Some(Affine::new(0, -(d as i64)))
        } else {
            None
        }
    };
    if tgrade > 1 {
        return Err(Error::Invalid("ray t-grade must be 0 or 1".into()));
    }
    Ok(Support::new(form(dir.0), form(dir.1), form(dir.0 + dir.1)))
}

impl fmt::Debug for LaurentSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "LaurentSeries on {} (complete: {})", self.window, self.complete)?;
        for ((a, b), p) in &self.cells {
            writeln!(f, "  z^{a} w^{b}: {p}")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::Rational;

    fn geometric(window: Window) -> LaurentSeries {
        let order = ray_order((-1, 1), 0, &window).unwrap();
        let s = PowerSeries::from_fn(order, |_| MultiPoly::one());
        LaurentSeries::ray(&s, (-1, 1), 0, window).unwrap()
    }

    #[test]
    fn unit_and_monomials() {
        let b = LaurentSeries::monomial(2, -1, "e1".parse().unwrap());
        let p = LaurentSeries::one().mul(&b).unwrap();
        assert_eq!(p.coefficient(2, -1).unwrap(), b.coefficient(2, -1).unwrap());
        let zw = LaurentSeries::monomial(1, -1, MultiPoly::one());
        let sq = zw.mul(&zw).unwrap();
        assert_eq!(sq.coefficient(2, -2).unwrap(), MultiPoly::one());
        assert!(sq.coefficient(1, -1).unwrap().is_zero());
    }

    #[test]
    fn coefficient_rejects_outside() {
        let g = geometric(Window::new(-4, 4, -4, 4, None));
        assert_eq!(g.coefficient(0, 0).unwrap(), MultiPoly::one());
        assert_eq!(g.coefficient(-3, 3).unwrap(), MultiPoly::one());
        assert!(g.coefficient(1, 0).unwrap().is_zero());
        assert!(matches!(g.coefficient(5, 0), Err(Error::OutOfWindow { .. })));
    }

    #[test]
    fn geometric_times_geometric() {
        // (1/(1 - w/z))^2 = sum (k+1) (w/z)^k.
        let g = geometric(Window::new(-6, 6, -6, 6, None));
        let h = g.mul_to(&g, Window::new(-3, 3, -3, 3, None)).unwrap();
        for k in 0..=3 {
            assert_eq!(h.coefficient(-k, k).unwrap(), MultiPoly::constant(Rational::from_int(k as i64 + 1)));
        }
        // Too small a factor window is refused.
        let small = geometric(Window::new(-2, 2, -2, 2, None));
        assert!(small.mul_to(&small, Window::new(-3, 3, -3, 3, None)).is_err());
        // The automatic window is certified and as large as possible.
        let auto = small.mul(&small).unwrap();
        assert_eq!(auto.coefficient(-2, 2).unwrap(), MultiPoly::int(3));
    }

    #[test]
    fn empty_window_is_rejected_with_bound() {
        // Two series unbounded below in z with no sum bound certify nothing.
        let sup = Support::new(None, Some(Affine::constant(0)), None);
        let a = LaurentSeries::windowed(Window::new(-2, 0, 0, 2, None), sup, [((0, 0), MultiPoly::one())]);
        let err = a.mul(&a).unwrap_err();
        assert!(matches!(err, Error::Window(_)));
    }
}
