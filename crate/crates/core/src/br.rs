//! `B_r = Q[e_1..e_r]` with its complete sequence `h_j`, the exponential
//! coordinates `x_n`, the Schur determinant basis `D_lambda`, and the
//! truncated ring `B = Q[x_1..x_N]` with its basis `S_lambda(x)`.
//!
//! `sum h_j z^j = 1/E_r(z)` with `E_r(z) = 1 - e_1 z + ... + (-1)^r e_r z^r`,
//! and `exp(sum x_n z^n) = 1/E_r(z)` as well.

use std::collections::{BTreeMap, HashMap};
use std::sync::{Mutex, OnceLock};

use crate::error::{Error, Result};
use crate::partition::Partition;
use crate::poly::{determinant, Monomial, MultiPoly, Var, VarKind};
use crate::rational::Rational;
use crate::series::PowerSeries;

/// `E_r(z)` up to `order`.
pub fn e_series(r: usize, order: usize) -> PowerSeries {
    PowerSeries::from_fn(order, |k| {
        if k == 0 {
            MultiPoly::one()
        } else if k <= r {
            MultiPoly::var(Var::e(k as u32)).scale(&Rational::sign(k as i64))
        } else {
            MultiPoly::zero()
        }
    })
}

fn h_table(r: usize, upto: usize) -> Vec<MultiPoly> {
    static CACHE: OnceLock<Mutex<HashMap<usize, Vec<MultiPoly>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    if let Some(v) = cache.lock().unwrap().get(&r) {
        if v.len() > upto {
            return v.clone();
        }
    }
    let v = e_series(r, upto.max(8)).inverse(upto.max(8), None).expect("E_r has constant term 1").coeffs().to_vec();
    cache.lock().unwrap().insert(r, v.clone());
    v
}

/// `h_j` in `B_r`; zero for `j < 0`.
pub fn h_of(j: i64, r: usize) -> MultiPoly {
    if j < 0 {
        return MultiPoly::zero();
    }
    h_table(r, j as usize)[j as usize].clone()
}

/// `x_n` in `B_r`, the coefficient of `z^n` in `log(1/E_r(z))`.
pub fn x_of(n: u32, r: usize) -> MultiPoly {
    let n = n as usize;
    let h = PowerSeries::new(h_table(r, n)[..=n].to_vec(), n);
    h.log(n, None).expect("constant term 1").coeff(n).clone()
}

/// A Schur determinant `det(a_{lambda_j - j + i})` on the `l(lambda)` minor.
pub fn schur_det(lambda: &Partition, entry: impl Fn(i64) -> MultiPoly) -> MultiPoly {
    let l = lambda.len();
    let m: Vec<Vec<MultiPoly>> = (1..=l)
        .map(|i| (1..=l).map(|j| entry(lambda.part(j) as i64 - j as i64 + i as i64)).collect())
        .collect();
    determinant(&m)
}

/// `D_lambda(H_r) = det(h_{lambda_j - j + i})`.
pub fn schur_delta(lambda: &Partition, r: usize) -> MultiPoly {
    static CACHE: OnceLock<Mutex<HashMap<(Partition, usize), MultiPoly>>> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    if let Some(v) = cache.lock().unwrap().get(&(lambda.clone(), r)) {
        return v.clone();
    }
    let upto = lambda.part(1) as usize + lambda.len();
    let h = h_table(r, upto);
    let v = schur_det(lambda, |k| if k < 0 { MultiPoly::zero() } else { h[k as usize].clone() });
    cache.lock().unwrap().insert((lambda.clone(), r), v.clone());
    v
}

/// The partition recording an `e`-monomial `e_{nu_1} e_{nu_2} ...`.
fn e_partition(m: &Monomial) -> Partition {
    let mut parts = Vec::new();
    for &(v, e) in m.pairs().iter().rev() {
        parts.extend(std::iter::repeat_n(v.index(), e as usize));
    }
    Partition::from_sorted(&parts)
}

/// Coefficients of `f` in the basis `D_lambda(H_r)`.
pub fn to_delta_basis(f: &MultiPoly, r: usize) -> Result<BTreeMap<Partition, Rational>> {
    if !f.only_vars(|v| v.kind() == VarKind::E && v.index() as usize <= r) {
        return Err(Error::Invalid(format!("{f} is not an element of B_{r}")));
    }
    // D_{nu'} = e_nu + (e-monomials of partitions dominating nu), so the
    // lexicographically smallest e-partition can always be cancelled.
    let mut rest = f.clone();
    let mut out = BTreeMap::new();
    while let Some((nu, c)) = rest.terms().iter().map(|(m, q)| (e_partition(m), q.clone())).min_by(|a, b| a.0.cmp(&b.0)) {
        let lambda = nu.conjugate();
        if lambda.len() > r {
            return Err(Error::Remainder(format!("{rest} left after elimination")));
        }
        rest = rest.sub(&schur_delta(&lambda, r).scale(&c));
        let prev: Rational = out.remove(&lambda).unwrap_or_else(Rational::zero);
        let sum = &prev + &c;
        if !sum.is_zero() {
            out.insert(lambda, sum);
        }
    }
    Ok(out)
}

/// As [`to_delta_basis`], with every non-`e` variable kept in the coefficient.
pub fn to_delta_basis_coeffs(f: &MultiPoly, r: usize) -> Result<BTreeMap<Partition, MultiPoly>> {
    let mut out: BTreeMap<Partition, MultiPoly> = BTreeMap::new();
    for (other, epart) in f.group_by(|v| v.kind() != VarKind::E) {
        for (lambda, q) in to_delta_basis(&epart, r)? {
            let e = out.entry(lambda).or_insert_with(MultiPoly::zero);
            e.add_assign(&MultiPoly::term(other.clone(), q));
        }
    }
    out.retain(|_, p| !p.is_zero());
    Ok(out)
}

/// `sum c_lambda D_lambda(H_r)`.
pub fn from_delta_basis<C: AsPoly>(c: &BTreeMap<Partition, C>, r: usize) -> MultiPoly {
    let mut acc = MultiPoly::zero();
    for (lambda, q) in c {
        acc.add_assign(&schur_delta(lambda, r).mul(&q.as_poly()));
    }
    acc
}

/// Coefficient types accepted by the basis maps.
pub trait AsPoly {
    fn as_poly(&self) -> MultiPoly;
}

impl AsPoly for Rational {
    fn as_poly(&self) -> MultiPoly {
        MultiPoly::constant(self.clone())
    }
}

impl AsPoly for MultiPoly {
    fn as_poly(&self) -> MultiPoly {
        self.clone()
    }
}

/// `exp(sum_{n<=trunc} x_n z^n)` up to `order`: the projected `S_j`.
fn s_table(trunc: u32, order: usize) -> Vec<MultiPoly> {
    static CACHE: OnceLock<Mutex<HashMap<u32, Vec<MultiPoly>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    if let Some(v) = cache.lock().unwrap().get(&trunc) {
        if v.len() > order {
            return v.clone();
        }
    }
    let order = order.max(12);
    let f = PowerSeries::from_fn(order, |k| {
        if k >= 1 && k as u32 <= trunc {
            MultiPoly::var(Var::x(k as u32))
        } else {
            MultiPoly::zero()
        }
    });
    let v = f.exp(order, None).expect("zero constant term").coeffs().to_vec();
    cache.lock().unwrap().insert(trunc, v.clone());
    v
}

/// `S_j(x)`, exact in `B`; needs `j <= trunc`.
pub fn s_of(j: i64, trunc: u32) -> Result<MultiPoly> {
    if j > trunc as i64 {
        return Err(Error::Truncation(format!("S_{j} needs x_{j}, truncation is {trunc}")));
    }
    Ok(s_projected(j, trunc))
}

/// `S_j(x)` with `x_n = 0` for `n > trunc`; any `j`.
pub fn s_projected(j: i64, trunc: u32) -> MultiPoly {
    if j < 0 {
        return MultiPoly::zero();
    }
    s_table(trunc, j as usize)[j as usize].clone()
}

/// `S_lambda(x) = det(S_{lambda_j - j + i})`, exact; needs `|lambda| <= trunc`.
pub fn s_schur(lambda: &Partition, trunc: u32) -> Result<MultiPoly> {
    if lambda.weight() > trunc {
        return Err(Error::Truncation(format!("S_({lambda}) has weight {} above truncation {trunc}", lambda.weight())));
    }
    Ok(s_schur_projected(lambda, trunc))
}

/// `S_lambda(x)` in the quotient `x_n = 0` for `n > trunc`.
pub fn s_schur_projected(lambda: &Partition, trunc: u32) -> MultiPoly {
    static CACHE: OnceLock<Mutex<HashMap<(Partition, u32), MultiPoly>>> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    if let Some(v) = cache.lock().unwrap().get(&(lambda.clone(), trunc)) {
        return v.clone();
    }
    let v = schur_det(lambda, |k| s_projected(k, trunc));
    cache.lock().unwrap().insert((lambda.clone(), trunc), v.clone());
    v
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> MultiPoly {
        s.parse().unwrap()
    }

    fn part(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn h_examples() {
        assert_eq!(h_of(-1, 3), MultiPoly::zero());
        assert_eq!(h_of(0, 3), MultiPoly::one());
        assert_eq!(h_of(1, 3), p("e1"));
        assert_eq!(h_of(2, 2), p("e1^2 - e2"));
        assert_eq!(h_of(3, 1), p("e1^3"));
    }

    #[test]
    fn x_examples() {
        assert_eq!(x_of(1, 3), p("e1"));
        assert_eq!(x_of(2, 3), p("1/2*e1^2 - e2"));
        let n = 5;
        let xs = PowerSeries::from_fn(n, |k| if k == 0 { MultiPoly::zero() } else { x_of(k as u32, 3) });
        let ex = xs.exp(n, None).unwrap();
        for j in 0..=n {
            assert_eq!(ex.coeff(j), &h_of(j as i64, 3));
        }
    }

    #[test]
    fn delta_examples() {
        assert_eq!(schur_delta(&Partition::empty(), 2), MultiPoly::one());
        assert_eq!(schur_delta(&part("1"), 2), p("e1"));
        assert_eq!(schur_delta(&part("1,1"), 2), p("e2"));
        assert_eq!(schur_delta(&part("1,1,1"), 2), MultiPoly::zero());
    }

    #[test]
    fn delta_basis_examples() {
        let one = to_delta_basis(&MultiPoly::one(), 2).unwrap();
        assert_eq!(one, BTreeMap::from([(Partition::empty(), Rational::one())]));
        let e2 = to_delta_basis(&p("e2"), 2).unwrap();
        assert_eq!(e2, BTreeMap::from([(part("1,1"), Rational::one())]));
        let f = p("3*e1^2*e2 - e3 + 2/3*e1");
        let c = to_delta_basis(&f, 3).unwrap();
        assert_eq!(from_delta_basis(&c, 3), f);
        assert!(to_delta_basis(&p("e3"), 2).is_err());
    }

    #[test]
    fn s_examples() {
        assert_eq!(s_of(0, 4).unwrap(), MultiPoly::one());
        assert_eq!(s_of(-2, 4).unwrap(), MultiPoly::zero());
        assert_eq!(s_of(2, 4).unwrap(), p("x2 + 1/2*x1^2"));
        assert_eq!(s_schur(&part("1,1"), 4).unwrap(), p("1/2*x1^2 - x2"));
        assert!(s_of(5, 4).is_err());
        assert!(s_schur(&part("3,2"), 4).is_err());
        assert_eq!(s_projected(2, 1), p("1/2*x1^2"));
    }
}
