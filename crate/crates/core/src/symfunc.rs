//! Symmetric polynomials in a finite alphabet `t_1..t_r`.
//!
//! Schur polynomials come from two independent constructions, the
//! bialternant quotient and the Jacobi-Trudi determinant, and each serves as
//! the other's oracle. [`to_schur_basis`] reads off Schur coefficients by
//! repeatedly cancelling the lexicographically largest monomial.

use std::collections::{BTreeMap, HashMap};
use std::sync::{Mutex, OnceLock};

use crate::error::{Error, Result};
use crate::partition::{self, Partition};
use crate::poly::{determinant, Monomial, MultiPoly, Var, VarKind};
use crate::rational::Rational;

fn t(k: usize) -> MultiPoly {
    MultiPoly::var(Var::t(k as u32))
}

/// `e_i(t_1..t_r)`; zero for `i > r`.
pub fn elementary_e(i: u32, r: usize) -> MultiPoly {
    // e_i(t_1..t_k) = e_i(t_1..t_{k-1}) + t_k e_{i-1}(t_1..t_{k-1})
    let mut row = vec![MultiPoly::zero(); i as usize + 1];
    row[0] = MultiPoly::one();
    for k in 1..=r {
        for j in (1..=i as usize).rev() {
            let add = row[j - 1].mul(&t(k));
            row[j].add_assign(&add);
        }
    }
    row.swap_remove(i as usize)
}

/// `h_i(t_1..t_r)`.
pub fn complete_h(i: u32, r: usize) -> MultiPoly {
    if r == 0 {
        return if i == 0 { MultiPoly::one() } else { MultiPoly::zero() };
    }
    // h_i(t_1..t_k) = h_i(t_1..t_{k-1}) + t_k h_{i-1}(t_1..t_k)
    let mut row = vec![MultiPoly::zero(); i as usize + 1];
    row[0] = MultiPoly::one();
    for k in 1..=r {
        for j in 1..=i as usize {
            let add = row[j - 1].mul(&t(k));
            row[j].add_assign(&add);
        }
    }
    row.swap_remove(i as usize)
}

/// `p_n(t_1..t_r)`; `p_0 = r`.
pub fn power_p(n: u32, r: usize) -> MultiPoly {
    if n == 0 {
        return MultiPoly::int(r as i64);
    }
    (1..=r).fold(MultiPoly::zero(), |acc, k| acc.add(&MultiPoly::term(Monomial::pow_of(Var::t(k as u32), n as u16), Rational::one())))
}

/// `det(t_j^(r-i))`, which equals `prod_{i<j} (t_i - t_j)`.
pub fn vandermonde(r: usize) -> MultiPoly {
    alternant(&vec![0; r], r)
}

fn alternant(parts: &[u32], r: usize) -> MultiPoly {
    let m: Vec<Vec<MultiPoly>> = (1..=r)
        .map(|i| {
            (1..=r)
                .map(|j| {
                    let e = (r - i) as u32 + parts.get(i - 1).copied().unwrap_or(0);
                    MultiPoly::term(Monomial::pow_of(Var::t(j as u32), e as u16), Rational::one())
                })
                .collect()
        })
        .collect();
    determinant(&m)
}

/// `s_lambda(t_r)` as `det(t_j^(r-i+lambda_i)) / det(t_j^(r-i))`.
///
/// The denominator is normalized so that `s_0 = 1`. Zero when `lambda` has
/// more than `r` parts.
pub fn schur_bialternant(lambda: &Partition, r: usize) -> Result<MultiPoly> {
    if lambda.len() > r {
        return Ok(MultiPoly::zero());
    }
    let num = alternant(lambda.parts(), r);
    num.div_exact(&vandermonde(r))
}

/// `det(h_{lambda_j - j + i}(t_r))` over the `l(lambda)` sized minor.
pub fn schur_jacobitrudi(lambda: &Partition, r: usize) -> MultiPoly {
    let l = lambda.len();
    let maxk = lambda.part(1) as usize + l;
    let hs: Vec<MultiPoly> = (0..=maxk).map(|k| complete_h(k as u32, r)).collect();
    let m: Vec<Vec<MultiPoly>> = (1..=l)
        .map(|i| {
            (1..=l)
                .map(|j| {
                    let k = lambda.part(j) as i64 - j as i64 + i as i64;
                    if k < 0 {
                        MultiPoly::zero()
                    } else {
                        hs[k as usize].clone()
                    }
                })
                .collect()
        })
        .collect();
    determinant(&m)
}

type Table = HashMap<(Partition, usize), BTreeMap<Vec<u32>, Rational>>;

/// Cached `s_lambda(t_r)` keyed by t-exponent vectors.
fn schur_terms(lambda: &Partition, r: usize) -> BTreeMap<Vec<u32>, Rational> {
    static CACHE: OnceLock<Mutex<Table>> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    if let Some(v) = cache.lock().unwrap().get(&(lambda.clone(), r)) {
        return v.clone();
    }
    let s = schur_jacobitrudi(lambda, r);
    let v: BTreeMap<Vec<u32>, Rational> = s.terms().iter().map(|(m, q)| (t_exponents(m, r), q.clone())).collect();
    cache.lock().unwrap().insert((lambda.clone(), r), v.clone());
    v
}

fn t_exponents(m: &Monomial, r: usize) -> Vec<u32> {
    (1..=r).map(|k| m.exponent(Var::t(k as u32)) as u32).collect()
}

/// Schur coefficients of a symmetric polynomial in `t_1..t_r`.
pub fn to_schur_basis(f: &MultiPoly, r: usize) -> Result<BTreeMap<Partition, Rational>> {
    if !f.only_vars(|v| v.is_t() && v.index() as usize <= r) {
        return Err(Error::Invalid(format!("{f} is not a polynomial in t1..t{r}")));
    }
    let c = to_schur_basis_coeffs(f, r)?;
    Ok(c.into_iter().map(|(k, p)| (k, p.constant_term())).collect())
}

/// Schur expansion in `t_1..t_r`, treating every other variable as part of
/// the coefficient.
pub fn to_schur_basis_coeffs(f: &MultiPoly, r: usize) -> Result<BTreeMap<Partition, MultiPoly>> {
    let mut rest: BTreeMap<Vec<u32>, MultiPoly> = BTreeMap::new();
    for (tm, cof) in f.group_by(|v| v.kind() == VarKind::T) {
        if tm.pairs().iter().any(|&(v, _)| v.index() as usize > r) {
            return Err(Error::Invalid(format!("{tm} lies outside the alphabet t1..t{r}")));
        }
        let key = t_exponents(&tm, r);
        rest.insert(key, cof);
    }
    let mut out = BTreeMap::new();
    while let Some((key, c)) = rest.iter().next_back().map(|(k, c)| (k.clone(), c.clone())) {
        if key.windows(2).any(|w| w[0] < w[1]) {
            let m = Monomial::from_pairs(
                &key.iter().enumerate().filter(|p| *p.1 > 0).map(|(i, &e)| (Var::t(i as u32 + 1), e as u16)).collect::<Vec<_>>(),
            );
            return Err(Error::Remainder(format!("leading monomial {m} is not a partition; input is not symmetric")));
        }
        let lambda = Partition::from_sorted(&key);
        for (beta, q) in schur_terms(&lambda, r) {
            let e = rest.entry(beta).or_insert_with(MultiPoly::zero);
            *e = e.sub(&c.scale(&q));
        }
        rest.retain(|_, p| !p.is_zero());
        out.insert(lambda, c);
    }
    Ok(out)
}

/// `sum c_lambda s_lambda(t_r)`.
pub fn from_schur_basis(c: &BTreeMap<Partition, MultiPoly>, r: usize) -> MultiPoly {
    let mut acc = MultiPoly::zero();
    for (lambda, cof) in c {
        let s = schur_jacobitrudi(lambda, r);
        acc.add_assign(&s.mul(cof));
    }
    acc
}

/// All `s_lambda(t_r)` with `|lambda| <= d`.
pub fn schur_list(r: usize, d: u32) -> Vec<(Partition, MultiPoly)> {
    partition::enumerate(r, d).into_iter().map(|l| {
        let s = schur_jacobitrudi(&l, r);
        (l, s)
    }).collect()
}

/// Swaps `t_a` and `t_b`.
pub fn transpose_vars(f: &MultiPoly, a: u32, b: u32) -> MultiPoly {
    f.substitute(&|v| {
        if v == Var::t(a) {
            Some(MultiPoly::var(Var::t(b)))
        } else if v == Var::t(b) {
            Some(MultiPoly::var(Var::t(a)))
        } else {
            None
        }
    })
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
    fn basic_symmetric() {
        assert_eq!(elementary_e(1, 2), p("t1 + t2"));
        assert_eq!(elementary_e(3, 2), MultiPoly::zero());
        assert_eq!(elementary_e(0, 3), MultiPoly::one());
        assert_eq!(power_p(2, 2), p("t1^2 + t2^2"));
        assert_eq!(complete_h(2, 2), p("t1^2 + t1*t2 + t2^2"));
        assert_eq!(complete_h(0, 0), MultiPoly::one());
    }

    #[test]
    fn schur_examples() {
        assert_eq!(schur_bialternant(&Partition::empty(), 3).unwrap(), MultiPoly::one());
        assert_eq!(schur_bialternant(&part("1"), 2).unwrap(), p("t1 + t2"));
        assert_eq!(schur_bialternant(&part("2,1"), 2).unwrap(), p("t1^2*t2 + t1*t2^2"));
        assert_eq!(schur_jacobitrudi(&part("3"), 2), complete_h(3, 2));
        assert_eq!(schur_jacobitrudi(&part("1,1"), 2), elementary_e(2, 2));
        assert_eq!(schur_bialternant(&part("1,1,1"), 2).unwrap(), MultiPoly::zero());
    }

    #[test]
    fn schur_basis_examples() {
        let one = to_schur_basis(&MultiPoly::one(), 2).unwrap();
        assert_eq!(one, BTreeMap::from([(Partition::empty(), Rational::one())]));
        let e2 = to_schur_basis(&elementary_e(2, 2), 2).unwrap();
        assert_eq!(e2, BTreeMap::from([(part("1,1"), Rational::one())]));
        let p2 = to_schur_basis(&power_p(2, 2), 2).unwrap();
        assert_eq!(p2, BTreeMap::from([(part("2"), Rational::one()), (part("1,1"), Rational::from_int(-1))]));
        assert!(matches!(to_schur_basis(&p("t1"), 2), Err(Error::Remainder(_))));
    }

    #[test]
    fn vandermonde_sign() {
        assert_eq!(vandermonde(2), p("t1 - t2"));
    }

    #[test]
    fn coefficients_carry_through() {
        let f = power_p(2, 2).mul(&p("e1 + x2"));
        let c = to_schur_basis_coeffs(&f, 2).unwrap();
        assert_eq!(c[&part("2")], p("e1 + x2"));
        assert_eq!(c[&part("1,1")], p("-e1 - x2"));
        assert_eq!(from_schur_basis(&c, 2), f);
    }
}
