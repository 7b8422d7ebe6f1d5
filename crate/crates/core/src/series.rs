//! Truncated univariate power series with polynomial coefficients.
//!
//! A `PowerSeries` stores `c_0 .. c_order`; everything above `order` is
//! unknown, never assumed zero. Every operation takes the truncation order
//! and an optional cap on t-degree explicitly.

use std::fmt;

use crate::error::{Error, Result};
use crate::poly::MultiPoly;
use crate::rational::Rational;

#[derive(Clone, PartialEq, Eq)]
pub struct PowerSeries {
    coeffs: Vec<MultiPoly>,
}

impl PowerSeries {
    /// Builds from coefficients `c_0..c_order`; the length fixes the order.
    pub fn new(mut coeffs: Vec<MultiPoly>, order: usize) -> Self {
        coeffs.resize(order + 1, MultiPoly::zero());
        PowerSeries { coeffs }
    }

    pub fn from_fn(order: usize, f: impl Fn(usize) -> MultiPoly) -> Self {
        PowerSeries { coeffs: (0..=order).map(f).collect() }
    }

    pub fn one(order: usize) -> Self {
        Self::new(vec![MultiPoly::one()], order)
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, k: usize) -> &MultiPoly {
        &self.coeffs[k]
    }

    pub fn coeffs(&self) -> &[MultiPoly] {
        &self.coeffs
    }

    pub fn truncate(&self, order: usize) -> Self {
        Self::new(self.coeffs.iter().take(order + 1).cloned().collect(), order.min(self.order()))
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.order().min(other.order());
        Self::from_fn(n, |k| self.coeffs[k].add(&other.coeffs[k]))
    }

    pub fn neg(&self) -> Self {
        PowerSeries { coeffs: self.coeffs.iter().map(|c| c.neg()).collect() }
    }

    pub fn mul(&self, other: &Self, tcap: Option<u32>) -> Self {
        let n = self.order().min(other.order());
        Self::from_fn(n, |k| {
            let mut acc = MultiPoly::zero();
            for i in 0..=k {
                let (a, b) = (&self.coeffs[i], &other.coeffs[k - i]);
                if !a.is_zero() && !b.is_zero() {
                    acc.add_assign(&a.mul_trunc(b, tcap));
                }
            }
            acc
        })
    }

    /// Multiplicative inverse up to `order`. The constant term must be a
    /// nonzero rational.
    pub fn inverse(&self, order: usize, tcap: Option<u32>) -> Result<Self> {
        let c0 = self.coeffs[0].as_constant().filter(|q| !q.is_zero());
        let c0 = c0.ok_or_else(|| Error::NonUnitConstant(self.coeffs[0].to_text()))?;
        let inv0 = c0.recip().expect("nonzero");
        let n = order.min(self.order());
        let mut g: Vec<MultiPoly> = vec![MultiPoly::constant(inv0.clone())];
        for k in 1..=n {
            let mut acc = MultiPoly::zero();
            for i in 1..=k {
                let a = &self.coeffs[i];
                if !a.is_zero() {
                    acc.add_assign(&a.mul_trunc(&g[k - i], tcap));
                }
            }
            g.push(acc.scale(&(-&inv0)));
        }
        Ok(Self::new(g, n))
    }

    /// `exp(f)` up to `order`; requires `f(0) = 0`.
    pub fn exp(&self, order: usize, tcap: Option<u32>) -> Result<Self> {
        if !self.coeffs[0].is_zero() {
            return Err(Error::NonZeroConstant(self.coeffs[0].to_text()));
        }
        let n = order.min(self.order());
        // g' = f' g, so n g_n = sum_{k=1..n} k f_k g_{n-k}.
        let mut g: Vec<MultiPoly> = vec![MultiPoly::one()];
        for m in 1..=n {
            let mut acc = MultiPoly::zero();
            for k in 1..=m {
                let f = &self.coeffs[k];
                if !f.is_zero() {
                    acc.add_assign(&f.mul_trunc(&g[m - k], tcap).scale(&Rational::from_int(k as i64)));
                }
            }
            g.push(acc.scale(&Rational::new(1, m as i64)));
        }
        Ok(Self::new(g, n))
    }

    /// `log(f)` up to `order`; requires `f(0) = 1`.
    pub fn log(&self, order: usize, tcap: Option<u32>) -> Result<Self> {
        if !self.coeffs[0].is_one() {
            return Err(Error::LogConstant(self.coeffs[0].to_text()));
        }
        let n = order.min(self.order());
        // f h' = f', so m h_m = m f_m - sum_{k=1..m-1} k h_k f_{m-k}.
        let mut h: Vec<MultiPoly> = vec![MultiPoly::zero()];
        for m in 1..=n {
            let mut acc = self.coeffs[m].scale(&Rational::from_int(m as i64));
            for k in 1..m {
                if !h[k].is_zero() && !self.coeffs[m - k].is_zero() {
                    let t = h[k].mul_trunc(&self.coeffs[m - k], tcap).scale(&Rational::from_int(k as i64));
                    acc = acc.sub(&t);
                }
            }
            h.push(acc.scale(&Rational::new(1, m as i64)).truncate_t(tcap));
        }
        Ok(Self::new(h, n))
    }
}

impl fmt::Debug for PowerSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(k, c)| format!("({c})*u^{k}"))
            .collect();
        write!(f, "{} + O(u^{})", if parts.is_empty() { "0".into() } else { parts.join(" + ") }, self.order() + 1)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> MultiPoly {
        s.parse().unwrap()
    }

    fn ser(cs: &[&str], order: usize) -> PowerSeries {
        PowerSeries::new(cs.iter().map(|s| p(s)).collect(), order)
    }

    #[test]
    fn inverse_examples() {
        assert_eq!(PowerSeries::one(5).inverse(5, None).unwrap(), PowerSeries::one(5));
        assert_eq!(ser(&["1", "-1"], 3).inverse(3, None).unwrap(), ser(&["1", "1", "1", "1"], 3));
        let f = ser(&["1", "-e1", "e2"], 2);
        let g = f.inverse(2, None).unwrap();
        assert_eq!(g, ser(&["1", "e1", "e1^2 - e2"], 2));
        assert_eq!(f.mul(&g, None), PowerSeries::one(2));
    }

    #[test]
    fn inverse_rejects_non_unit() {
        let err = ser(&["e1", "1"], 2).inverse(2, None).unwrap_err();
        assert_eq!(err, Error::NonUnitConstant("e1".into()));
        assert!(ser(&["0", "1"], 2).inverse(2, None).is_err());
    }

    #[test]
    fn exp_examples() {
        assert_eq!(PowerSeries::new(vec![], 4).exp(4, None).unwrap(), PowerSeries::one(4));
        let n = 6;
        let f = PowerSeries::from_fn(n, |i| if i == 0 { MultiPoly::zero() } else { MultiPoly::constant(Rational::new(1, i as i64)) });
        assert_eq!(f.exp(n, None).unwrap(), PowerSeries::from_fn(n, |_| MultiPoly::one()));
        assert!(ser(&["1"], 2).exp(2, None).is_err());
    }

    #[test]
    fn log_examples() {
        assert_eq!(PowerSeries::one(3).log(3, None).unwrap(), PowerSeries::new(vec![], 3));
        let h = ser(&["1", "-e1", "e2"], 2).inverse(2, None).unwrap();
        let l = h.log(2, None).unwrap();
        assert_eq!(l, ser(&["0", "e1", "1/2*e1^2 - e2"], 2));
        assert_eq!(l.exp(2, None).unwrap(), h);
        assert!(ser(&["2"], 1).log(1, None).is_err());
    }
}
