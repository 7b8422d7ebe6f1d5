//! The charge-0 fermionic Fock space and the `gl_inf` action on
//! `B = Q[x_1, x_2, ...]`.
//!
//! A state `[X]^lambda` is stored as its partition; the semi-infinite wedge
//! has indices `lambda_k - k + 1` and agrees with the vacuum from position
//! `l(lambda) + 1` on. Operators act on a finite prefix and follow fixed
//! rules on the tail.
//!
//! Three routes to the matrix coefficients of `E_ij = X^i (x) d^j` on
//! `S_lambda(x)` are provided: the direct Fock action [`fock_elementary`]
//! read through the boson-fermion map, the closed-form generating series
//! [`thm_b_series`], and the vertex-operator pipeline [`gamma_operator`].

use std::collections::BTreeMap;

use crate::br::{s_projected, s_schur, s_schur_projected};
use crate::error::{Error, Result};
use crate::exterior::{sort_sign, Key};
use crate::laurent::{product_to, Factor, LaurentSeries, Window};
use crate::partition::{self, Partition};
use crate::poly::{Monomial, MultiPoly, Var, VarKind};
use crate::rational::Rational;
use crate::schubert::{expand_factors, Basis, Op, Series};
use crate::series::PowerSeries;
use crate::symfunc::{complete_h, elementary_e, power_p, to_schur_basis_coeffs};

/// A finite combination of Fock states.
pub type FockElement = BTreeMap<Partition, Rational>;

/// Fock-valued series in `z`, `w`, `t`.
pub type FockSeries = Series<Partition>;

fn state_of(idx: &[i32]) -> Option<(Partition, bool)> {
    let mut k: Key = idx.iter().copied().collect();
    let odd = sort_sign(&mut k)?;
    Some((Partition::from_fock_indices(&k).expect("charge-0 prefix above the vacuum tail"), odd))
}

impl Basis for Partition {
    fn expand(&self, op: Op, max: Option<u32>) -> Result<Vec<(i32, Self, i64)>> {
        let l = self.len();
        let li = l as i32;
        let mut out: BTreeMap<(i32, Partition), i64> = BTreeMap::new();
        let mut push = |s: i32, idx: &[i32], c: i64| {
            if let Some((p, odd)) = state_of(idx) {
                *out.entry((s, p)).or_insert(0) += if odd { -c } else { c };
            }
        };
        match op {
            // sigma_+(z)[X]^m = sigma_+(z)X^m ^ [X]^(m-1): the first vacuum
            // factor moves, the rest of the tail is fixed.
            Op::Plus => {
                for (s, k, c) in expand_factors(op, &self.fock_indices(l + 1), i32::MIN, max)? {
                    let mut idx = k.to_vec();
                    idx.push(-li - 1);
                    push(s, &idx, c);
                }
            }
            // sigma-bar_+(z)[X]^m = sum_k (-z)^k [X]^(m + (1^k)).
            Op::BarPlus => {
                let max = max.ok_or_else(|| Error::Truncation("sigma-bar_+ on the Fock space needs an order".into()))?;
                for (s, k, c) in expand_factors(op, &self.fock_indices(l), i32::MIN, Some(max))? {
                    for raise in 0..=(max as i32 - s) {
                        let mut idx = k.to_vec();
                        idx.extend((1..=raise).map(|m| -li - m + 2));
                        idx.push(-li - raise);
                        push(s + raise, &idx, if raise % 2 == 1 { -c } else { c });
                    }
                }
            }
            // sigma_-(z)[X]^m = [X]^m: only the prefix moves, and anything
            // lowered onto the tail vanishes.
            Op::Minus | Op::BarMinus => {
                for (s, k, c) in expand_factors(op, &self.fock_indices(l), 1 - li, max)? {
                    let mut idx = k.to_vec();
                    idx.push(-li);
                    push(s, &idx, c);
                }
            }
        }
        Ok(out.into_iter().filter(|(_, c)| *c != 0).map(|((s, p), c)| (s, p, c)).collect())
    }
}

/// `X^i ^ d^j _| [X]^lambda` for any integers `i`, `j`.
pub fn fock_elementary(i: i32, j: i32, lambda: &Partition) -> FockElement {
    // Below min(i, j) the wedge is untouched, so a prefix reaching past it
    // decides everything.
    let depth = (lambda.len() + 1).max((1 - i.min(j)).max(0) as usize + 1);
    let idx = lambda.fock_indices(depth);
    let Some(pos) = idx.iter().position(|&e| e == j) else {
        return FockElement::new();
    };
    let mut v = Vec::with_capacity(depth);
    v.push(i);
    v.extend(idx.iter().enumerate().filter(|&(p, _)| p != pos).map(|(_, &e)| e));
    match state_of(&v) {
        None => FockElement::new(),
        Some((p, odd)) => {
            let sign = (pos % 2 == 1) ^ odd;
            FockElement::from([(p, Rational::from_int(if sign { -1 } else { 1 }))])
        }
    }
}

/// `E_ij` extended linearly.
pub fn fock_apply(i: i32, j: i32, u: &FockElement) -> FockElement {
    let mut out = FockElement::new();
    for (lambda, c) in u {
        for (mu, q) in fock_elementary(i, j, lambda) {
            let e = out.entry(mu).or_insert_with(Rational::zero);
            *e = &*e + &(c * &q);
        }
    }
    out.retain(|_, q| !q.is_zero());
    out
}

/// `E_ij E_kl - E_kl E_ij = delta_jk E_il - delta_li E_kj` on one state.
pub fn fock_bracket_check(m: (i32, i32), n: (i32, i32), lambda: &Partition) -> std::result::Result<(), String> {
    let u = FockElement::from([(lambda.clone(), Rational::one())]);
    let mut lhs = fock_apply(m.0, m.1, &fock_apply(n.0, n.1, &u));
    for (p, q) in fock_apply(n.0, n.1, &fock_apply(m.0, m.1, &u)) {
        let e = lhs.entry(p).or_insert_with(Rational::zero);
        *e = &*e - &q;
    }
    lhs.retain(|_, q| !q.is_zero());
    let mut rhs = FockElement::new();
    if m.1 == n.0 {
        rhs = fock_apply(m.0, n.1, &u);
    }
    if n.1 == m.0 {
        for (p, q) in fock_apply(n.0, m.1, &u) {
            let e = rhs.entry(p).or_insert_with(Rational::zero);
            *e = &*e - &q;
        }
    }
    rhs.retain(|_, q| !q.is_zero());
    if lhs == rhs {
        Ok(())
    } else {
        Err(format!("E{m:?} E{n:?} on [X]^({lambda}): commutator {lhs:?} but bracket {rhs:?}"))
    }
}

/// Solves `f = sum c_mu S_mu(x)`, one weight at a time. `f` must lie in
/// `Q[x_1..x_trunc]` with every weight at most `trunc`.
pub fn boson_fermion(f: &MultiPoly, trunc: u32) -> Result<FockElement> {
    if !f.only_vars(|v| v.kind() == VarKind::X && v.index() <= trunc) {
        return Err(Error::Invalid(format!("{f} is not a polynomial in x1..x{trunc}")));
    }
    let mut by_weight: BTreeMap<u32, MultiPoly> = BTreeMap::new();
    for (m, q) in f.terms() {
        by_weight.entry(m.weight()).or_insert_with(MultiPoly::zero).add_assign(&MultiPoly::term(m.clone(), q.clone()));
    }
    let mut out = FockElement::new();
    for (n, part) in by_weight {
        if n > trunc {
            return Err(Error::Remainder(format!("weight {n} exceeds the truncation {trunc}")));
        }
        out.extend(solve_weight(&part, n, trunc)?);
    }
    Ok(out)
}

fn solve_weight(f: &MultiPoly, n: u32, trunc: u32) -> Result<FockElement> {
    let basis = partition::of_weight(n, n as usize);
    let cols: Vec<MultiPoly> = basis.iter().map(|mu| s_schur(mu, trunc)).collect::<Result<_>>()?;
    let mut monos: Vec<Monomial> = cols.iter().flat_map(|c| c.terms().iter().map(|(m, _)| m.clone())).collect();
    monos.extend(f.terms().iter().map(|(m, _)| m.clone()));
    monos.sort();
    monos.dedup();
    // Augmented matrix, rows indexed by x-monomials.
    let nc = basis.len();
    let mut rows: Vec<Vec<Rational>> =
        monos.iter().map(|m| cols.iter().map(|c| c.coeff(m)).chain(std::iter::once(f.coeff(m))).collect()).collect();
    let mut pivots = Vec::new();
    let mut r0 = 0;
    for c in 0..nc {
        let Some(p) = (r0..rows.len()).find(|&r| !rows[r][c].is_zero()) else { continue };
        rows.swap(r0, p);
        let inv = rows[r0][c].recip().expect("nonzero pivot");
        for x in rows[r0].iter_mut() {
            *x = &*x * &inv;
        }
        for r in 0..rows.len() {
            if r != r0 && !rows[r][c].is_zero() {
                let q = rows[r][c].clone();
                for k in 0..=nc {
                    let v = &rows[r][k] - &(&q * &rows[r0][k]);
                    rows[r][k] = v;
                }
            }
        }
        pivots.push(c);
        r0 += 1;
    }
    if rows[r0..].iter().any(|row| !row[nc].is_zero()) {
        return Err(Error::Remainder(format!("weight-{n} part {f} is not in the span of S_mu")));
    }
    let mut out = FockElement::new();
    for (r, &c) in pivots.iter().enumerate() {
        if !rows[r][nc].is_zero() {
            out.insert(basis[c].clone(), rows[r][nc].clone());
        }
    }
    Ok(out)
}

/// `sum c_mu S_mu(x)`; needs `|mu| <= trunc`.
pub fn fermion_boson(u: &FockElement, trunc: u32) -> Result<MultiPoly> {
    let mut acc = MultiPoly::zero();
    for (mu, c) in u {
        acc.add_assign(&s_schur(mu, trunc)?.scale(c));
    }
    Ok(acc)
}

/// `sum c_mu S_mu(x)` in the quotient `x_n = 0` for `n > trunc`.
pub fn fermion_boson_projected(u: &FockElement, trunc: u32) -> MultiPoly {
    let mut acc = MultiPoly::zero();
    for (mu, c) in u {
        acc.add_assign(&s_schur_projected(mu, trunc).scale(c));
    }
    acc
}

/// `E_ij S_lambda` through the Fock space, read in the same quotient as the
/// truncated closed forms.
pub fn fock_oracle(i: i32, j: i32, lambda: &Partition, trunc: u32) -> MultiPoly {
    fermion_boson_projected(&fock_elementary(i, j, lambda), trunc)
}

/// `exp(sum_{n <= trunc} c x_n z^n)` as a series in `z`: `S_k(c x)`.
fn s_ray(sign: i64, trunc: u32, order: usize) -> PowerSeries {
    let q = Rational::from_int(sign);
    PowerSeries::from_fn(order, |k| {
        let s = s_projected(k as i64, trunc);
        if sign == 1 {
            s
        } else {
            s.substitute(&|v| (v.kind() == VarKind::X).then(|| MultiPoly::var(v).scale(&q)))
        }
    })
}

fn geometric(order: usize) -> PowerSeries {
    PowerSeries::from_fn(order, |_| MultiPoly::one())
}

/// `exp(sum_n x_n p_n(t_r))` graded by t-degree, in the quotient `x_n = 0`
/// for `n > trunc`.
fn cauchy(r: usize, trunc: u32, order: usize) -> Result<PowerSeries> {
    let arg = PowerSeries::from_fn(order, |n| {
        if n == 0 || n as u32 > trunc {
            MultiPoly::zero()
        } else {
            MultiPoly::var(Var::x(n as u32)).mul(&power_p(n as u32, r))
        }
    });
    arg.exp(order, None)
}

/// The closed-form structural series of `gl_inf` on `B`,
///
/// ```text
/// exp(sum_n (w^n/z^n - p_n(t)/z^n + p_n(t)/w^n)/n + x_n (z^n - w^n + p_n(t)))
/// ```
///
/// with `t = t_1..t_r`, in the quotient `x_n = 0` for `n > trunc`. The first
/// term is the geometric series in `w/z`.
pub fn thm_b_series(r: usize, trunc: u32, target: Window) -> Result<LaurentSeries> {
    if target.tcap.is_none() {
        return Err(Error::Window("the structural series needs a t-degree cap".into()));
    }
    let factors = vec![
        Factor::ray((-1, 1), 0, |n| Ok(geometric(n)))?,
        Factor::ray((-1, 0), 1, move |n| {
            Ok(PowerSeries::from_fn(n, |k| elementary_e(k as u32, r).scale(&Rational::sign(k as i64))))
        })?,
        Factor::ray((0, -1), 1, move |n| Ok(PowerSeries::from_fn(n, |k| complete_h(k as u32, r))))?,
        Factor::ray((1, 0), 0, move |n| Ok(s_ray(1, trunc, n)))?,
        Factor::ray((0, 1), 0, move |n| Ok(s_ray(-1, trunc, n)))?,
        Factor::ray((0, 0), 1, move |n| cauchy(r, trunc, n))?,
    ];
    product_to(&factors, target)
}

/// Window `|i|, |j| <= m` for the coefficient of `z^i w^-j`.
pub fn thm_b_window(m: u32, tcap: u32) -> Window {
    let m = m as i32;
    Window::new(-m, m, -m, m, Some(tcap))
}

/// `z^i w^-j` slice of the structural series by `s_lambda(t_r)`.
pub fn thm_b_slice(series: &LaurentSeries, i: i32, j: i32, r: usize) -> Result<BTreeMap<Partition, MultiPoly>> {
    to_schur_basis_coeffs(&series.coefficient(i, -j)?, r)
}

// z^-1 and w^-1 inside the derivative factor ride on t1 and t2; the input
// never contains t, and the result is split back into cells.
const ZINV: u32 = 1;
const WINV: u32 = 2;

/// `exp(-sum_n (z^-n - w^-n)/n d/dx_n) f`; the operator lowers weight, so
/// the series stops.
pub fn translate(f: &MultiPoly, trunc: u32) -> Result<BTreeMap<(i32, i32), MultiPoly>> {
    if !f.only_vars(|v| v.kind() == VarKind::X) {
        return Err(Error::Invalid(format!("{f} is not a polynomial in x")));
    }
    let nmax = f.vars().iter().map(|v| v.index()).max().unwrap_or(0).min(trunc);
    let coef: Vec<MultiPoly> = (1..=nmax)
        .map(|n| {
            let zt = MultiPoly::term(Monomial::pow_of(Var::t(ZINV), n as u16), Rational::one());
            let wt = MultiPoly::term(Monomial::pow_of(Var::t(WINV), n as u16), Rational::one());
            wt.sub(&zt).scale(&Rational::new(1, n as i64))
        })
        .collect();
    let mut acc = f.clone();
    let mut term = f.clone();
    let mut k = 1;
    loop {
        let mut next = MultiPoly::zero();
        for (n, c) in coef.iter().enumerate() {
            next.add_assign(&term.derivative(Var::x(n as u32 + 1)).mul(c));
        }
        if next.is_zero() {
            break;
        }
        term = next.scale(&Rational::new(1, k));
        acc.add_assign(&term);
        k += 1;
    }
    let mut cells: BTreeMap<(i32, i32), MultiPoly> = BTreeMap::new();
    for (m, cof) in acc.group_by(|v| v.kind() == VarKind::T) {
        let a = -(m.exponent(Var::t(ZINV)) as i32);
        let b = -(m.exponent(Var::t(WINV)) as i32);
        cells.insert((a, b), cof);
    }
    Ok(cells)
}

/// `1/(1 - w/z) exp(sum x_n (z^n - w^n)) exp(-sum (z^-n - w^-n)/n d/dx_n)`
/// applied to `S_lambda(x)`; its `z^i w^-j` cell is `E_ij S_lambda`.
pub fn gamma_operator(lambda: &Partition, trunc: u32, target: Window) -> Result<LaurentSeries> {
    let f = s_schur_projected(lambda, trunc);
    let moved = LaurentSeries::from_cells(translate(&f, trunc)?);
    let factors = vec![
        Factor::fixed(moved),
        Factor::ray((1, 0), 0, move |n| Ok(s_ray(1, trunc, n)))?,
        Factor::ray((0, 1), 0, move |n| Ok(s_ray(-1, trunc, n)))?,
        Factor::ray((-1, 1), 0, |n| Ok(geometric(n)))?,
    ];
    product_to(&factors, Window { tcap: None, ..target })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn part(s: &str) -> Partition {
        s.parse().unwrap()
    }

    fn one(p: &str) -> FockElement {
        FockElement::from([(part(p), Rational::one())])
    }

    #[test]
    fn elementary_examples() {
        assert!(fock_elementary(0, 5, &Partition::empty()).is_empty());
        assert_eq!(fock_elementary(1, 0, &Partition::empty()), one("1"));
        assert_eq!(fock_elementary(0, 0, &Partition::empty()), one("-"));
        assert_eq!(fock_elementary(-3, -3, &Partition::empty()), one("-"));
        assert!(fock_elementary(-3, 0, &Partition::empty()).is_empty());
    }

    #[test]
    fn boson_fermion_examples() {
        assert_eq!(boson_fermion(&MultiPoly::one(), 4).unwrap(), one("-"));
        assert_eq!(boson_fermion(&"x1".parse().unwrap(), 4).unwrap(), one("1"));
        assert_eq!(boson_fermion(&"1/2*x1^2 - x2".parse().unwrap(), 4).unwrap(), one("1,1"));
        let f: MultiPoly = "3*x1*x2 - 2/5*x3 + x1^3 + 7".parse().unwrap();
        assert_eq!(fermion_boson(&boson_fermion(&f, 4).unwrap(), 4).unwrap(), f);
    }

    #[test]
    fn fock_sigma_examples() {
        let vac = FockSeries::state(Partition::empty(), MultiPoly::one(), Some(2));
        let s = vac.apply(Op::Plus, crate::schubert::Slot::T(1)).unwrap();
        let cell = s.cell(0, 0).unwrap();
        assert_eq!(cell.len(), 3);
        assert_eq!(cell[&part("2")], "t1^2".parse().unwrap());
        for op in [Op::Minus, Op::BarMinus] {
            let m = FockSeries::state(Partition::empty(), MultiPoly::one(), None).apply(op, crate::schubert::Slot::Z).unwrap();
            assert_eq!(m.cells().len(), 1);
        }
    }

    #[test]
    fn plus_inverts_bar_plus() {
        for lambda in partition::enumerate(3, 3) {
            let s = FockSeries::state(lambda.clone(), MultiPoly::one(), None).with_zcap(4);
            let back = s.apply(Op::BarPlus, crate::schubert::Slot::Z).unwrap().apply(Op::Plus, crate::schubert::Slot::Z).unwrap();
            assert_eq!(back.difference(&s), None, "({lambda})");
        }
    }

    #[test]
    fn thm_b_small_cells() {
        let s = thm_b_series(2, 3, thm_b_window(1, 1)).unwrap();
        let c00 = thm_b_slice(&s, 0, 0, 2).unwrap();
        assert_eq!(c00[&Partition::empty()], MultiPoly::one());
        let c10 = thm_b_slice(&s, 1, 0, 2).unwrap();
        assert_eq!(c10[&Partition::empty()], "x1".parse().unwrap());
    }

    #[test]
    fn gamma_on_one() {
        let g = gamma_operator(&Partition::empty(), 4, thm_b_window(2, 0)).unwrap();
        for i in -2..=2 {
            for j in -2..=2 {
                assert_eq!(g.coefficient(i, -j).unwrap(), fock_oracle(i, j, &Partition::empty(), 4), "{i},{j}");
            }
        }
    }
}
