//! The exterior algebra of `V = Q[X]`.
//!
//! A wedge monomial is stored as its strictly decreasing exponent list; any
//! other ordering is reduced by [`sort_sign`]. Coefficients are generic over
//! [`Scalar`] so that series-valued wedges share the same sign kernel.

use std::cmp::Reverse;
use std::collections::BTreeMap;
use std::fmt;

use smallvec::SmallVec;

use crate::partition::Partition;
use crate::poly::MultiPoly;
use crate::rational::Rational;

/// Exponents of a wedge monomial, strictly decreasing.
pub type Key = SmallVec<[i32; 8]>;

/// Coefficient ring of a wedge element.
pub trait Scalar: Clone + PartialEq + fmt::Debug + fmt::Display + Send + Sync {
    fn zero() -> Self;
    fn from_int(n: i64) -> Self;
    fn is_zero(&self) -> bool;
    fn plus(&self, o: &Self) -> Self;
    fn times(&self, o: &Self) -> Self;
    fn negated(&self) -> Self;
}

impl Scalar for Rational {
    fn zero() -> Self {
        Rational::zero()
    }
    fn from_int(n: i64) -> Self {
        Rational::from_int(n)
    }
    fn is_zero(&self) -> bool {
        Rational::is_zero(self)
    }
    fn plus(&self, o: &Self) -> Self {
        self + o
    }
    fn times(&self, o: &Self) -> Self {
        self * o
    }
    fn negated(&self) -> Self {
        -self
    }
}

impl Scalar for MultiPoly {
    fn zero() -> Self {
        MultiPoly::zero()
    }
    fn from_int(n: i64) -> Self {
        MultiPoly::int(n)
    }
    fn is_zero(&self) -> bool {
        MultiPoly::is_zero(self)
    }
    fn plus(&self, o: &Self) -> Self {
        self.add(o)
    }
    fn times(&self, o: &Self) -> Self {
        self.mul(o)
    }
    fn negated(&self) -> Self {
        self.neg()
    }
}

/// Sorts into strictly decreasing order. Returns the permutation sign
/// (`true` for odd), or `None` when two exponents coincide.
pub fn sort_sign(v: &mut [i32]) -> Option<bool> {
    let mut odd = false;
    // insertion sort: the lists are short and the swap count is the parity
    for i in 1..v.len() {
        let mut j = i;
        while j > 0 && v[j - 1] < v[j] {
            v.swap(j - 1, j);
            odd = !odd;
            j -= 1;
        }
        if j > 0 && v[j - 1] == v[j] {
            return None;
        }
    }
    if v.windows(2).any(|w| w[0] == w[1]) {
        return None;
    }
    Some(odd)
}

/// Homogeneous element of `wedge^degree V`.
#[derive(Clone, PartialEq)]
pub struct Wedge<S: Scalar> {
    degree: usize,
    terms: BTreeMap<Reverse<Key>, S>,
}

impl<S: Scalar> Wedge<S> {
    pub fn zero(degree: usize) -> Self {
        Wedge { degree, terms: BTreeMap::new() }
    }

    /// `c * X^{e_1} ^ ... ^ X^{e_r}` in any order; zero on a repeat or on a
    /// negative exponent (`X^i = 0` for `i < 0`).
    pub fn normalize(exps: &[i32], c: S) -> Self {
        let mut out = Self::zero(exps.len());
        if exps.iter().any(|&e| e < 0) {
            return out;
        }
        out.add_unsorted(exps, c);
        out
    }

    /// `X^r(lambda)`.
    pub fn basis(lambda: &Partition, r: usize) -> Self {
        let mut out = Self::zero(r);
        out.add_term(lambda.wedge_exponents(r).into_iter().collect(), S::from_int(1));
        out
    }

    /// `X^i`.
    pub fn vector(i: i32) -> Self {
        Self::normalize(&[i], S::from_int(1))
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms, leading (lexicographically largest exponent list) first.
    pub fn terms(&self) -> impl Iterator<Item = (&Key, &S)> {
        self.terms.iter().map(|(k, c)| (&k.0, c))
    }

    pub fn coefficient(&self, exps: &[i32]) -> S {
        let mut v: Key = exps.iter().copied().collect();
        match sort_sign(&mut v) {
            None => S::zero(),
            Some(odd) => {
                let c = self.terms.get(&Reverse(v)).cloned().unwrap_or_else(S::zero);
                if odd {
                    c.negated()
                } else {
                    c
                }
            }
        }
    }

    /// Adds `c` on an already sorted key.
    pub fn add_term(&mut self, key: Key, c: S) {
        debug_assert_eq!(key.len(), self.degree);
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(Reverse(key)) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                let s = o.get().plus(&c);
                if s.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = s;
                }
            }
        }
    }

    /// Adds `c * X^{exps}` with the exponents in any order, negatives allowed.
    pub fn add_unsorted(&mut self, exps: &[i32], c: S) {
        let mut v: Key = exps.iter().copied().collect();
        if let Some(odd) = sort_sign(&mut v) {
            self.add_term(v, if odd { c.negated() } else { c });
        }
    }

    pub fn add(&self, o: &Self) -> Self {
        let mut out = self.clone();
        out.add_assign(o);
        out
    }

    pub fn add_assign(&mut self, o: &Self) {
        assert_eq!(self.degree, o.degree, "wedge degrees differ");
        for (k, c) in &o.terms {
            self.add_term(k.0.clone(), c.clone());
        }
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.neg())
    }

    pub fn neg(&self) -> Self {
        self.map(|c| c.negated())
    }

    pub fn scale(&self, s: &S) -> Self {
        self.map(|c| c.times(s))
    }

    pub fn map(&self, f: impl Fn(&S) -> S) -> Self {
        let terms = self.terms.iter().map(|(k, c)| (k.clone(), f(c))).filter(|(_, c)| !c.is_zero()).collect();
        Wedge { degree: self.degree, terms }
    }

    /// `self ^ o`.
    pub fn wedge(&self, o: &Self) -> Self {
        let mut out = Self::zero(self.degree + o.degree);
        let mut buf: Vec<i32> = Vec::with_capacity(out.degree);
        for (a, ca) in &self.terms {
            for (b, cb) in &o.terms {
                buf.clear();
                buf.extend_from_slice(&a.0);
                buf.extend_from_slice(&b.0);
                out.add_unsorted(&buf, ca.times(cb));
            }
        }
        out
    }

    /// `d^j _| self`: factor `i` equal to `X^j` is removed with sign `(-1)^(i+1)`.
    pub fn contract(&self, j: i32) -> Self {
        let mut out = Self::zero(self.degree.saturating_sub(1));
        if self.degree == 0 {
            return out;
        }
        for (k, c) in &self.terms {
            if let Some(pos) = k.0.iter().position(|&e| e == j) {
                let mut rest = k.0.clone();
                rest.remove(pos);
                out.add_term(rest, if pos % 2 == 1 { c.negated() } else { c.clone() });
            }
        }
        out
    }

    /// The derivation extending `phi` from `V`: one factor at a time is
    /// replaced by its image.
    pub fn delta_derivation(&self, phi: &dyn Fn(i32) -> Vec<(i32, S)>) -> Self {
        let mut out = Self::zero(self.degree);
        let mut buf: Vec<i32> = Vec::with_capacity(self.degree);
        for (k, c) in &self.terms {
            for pos in 0..k.0.len() {
                for (img, q) in phi(k.0[pos]) {
                    buf.clear();
                    buf.extend_from_slice(&k.0);
                    buf[pos] = img;
                    if img >= 0 {
                        out.add_unsorted(&buf, c.times(&q));
                    }
                }
            }
        }
        out
    }

    /// Coordinates in the basis `X^r(lambda)`.
    pub fn to_partitions(&self) -> BTreeMap<Partition, S> {
        self.terms
            .iter()
            .map(|(k, c)| (Partition::from_wedge_exponents(&k.0).expect("nonnegative strictly decreasing"), c.clone()))
            .collect()
    }

    pub fn from_partitions(c: &BTreeMap<Partition, S>, r: usize) -> Self {
        let mut out = Self::zero(r);
        for (l, q) in c {
            out.add_term(l.wedge_exponents(r).into_iter().collect(), q.clone());
        }
        out
    }
}

impl Wedge<Rational> {
    /// Lifts to polynomial coefficients.
    pub fn to_poly(&self) -> Wedge<MultiPoly> {
        let terms = self.terms.iter().map(|(k, c)| (k.clone(), MultiPoly::constant(c.clone()))).collect();
        Wedge { degree: self.degree, terms }
    }
}

/// `X^3^X^1^X^0`; the empty wedge is `1`.
pub fn key_text(k: &[i32]) -> String {
    if k.is_empty() {
        return "1".into();
    }
    k.iter().map(|e| format!("X^{e}")).collect::<Vec<_>>().join("^")
}

impl<S: Scalar> fmt::Display for Wedge<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let one = S::from_int(1);
        let mone = S::from_int(-1);
        for (n, (k, c)) in self.terms.iter().enumerate() {
            let m = key_text(&k.0);
            let piece = if *c == one {
                m
            } else if *c == mone {
                format!("-{m}")
            } else {
                format!("({c})*{m}")
            };
            if n > 0 && !piece.starts_with('-') {
                f.write_str(" + ")?;
            } else if n > 0 {
                f.write_str(" ")?;
            }
            f.write_str(&piece)?;
        }
        Ok(())
    }
}

impl<S: Scalar> fmt::Debug for Wedge<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Wedge[{}]({self})", self.degree)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    type W = Wedge<Rational>;

    fn m(exps: &[i32]) -> W {
        W::normalize(exps, Rational::one())
    }

    #[test]
    fn normalize_examples() {
        assert_eq!(m(&[0, 3]), m(&[3, 0]).neg());
        assert!(m(&[2, 2]).is_zero());
        assert!(m(&[1, -1]).is_zero());
    }

    #[test]
    fn wedge_examples() {
        assert_eq!(m(&[1]).wedge(&m(&[0])), W::basis(&Partition::empty(), 2));
        assert!(m(&[3]).wedge(&m(&[3])).is_zero());
        let u = m(&[2, 0]).wedge(&m(&[1]));
        assert_eq!(u, W::basis(&Partition::empty(), 3).neg());
    }

    #[test]
    fn contract_examples() {
        let x2 = W::basis(&Partition::empty(), 2);
        assert_eq!(x2.contract(0), m(&[1]).neg());
        assert!(x2.contract(5).is_zero());
        assert_eq!(m(&[2, 1, 0]).contract(2), m(&[1, 0]));
    }

    #[test]
    fn derivation_examples() {
        let u = m(&[2, 0]);
        let id = |i: i32| vec![(i, Rational::one())];
        assert_eq!(u.delta_derivation(&id), u.scale(&Rational::from_int(2)));
        let phi = |i: i32| if i == 0 { vec![(1, Rational::one())] } else { vec![] };
        assert_eq!(u.delta_derivation(&phi), m(&[2, 1]));
    }

    #[test]
    fn text_form() {
        assert_eq!(m(&[3, 1, 0]).to_string(), "X^3^X^1^X^0");
        assert_eq!(m(&[0, 1]).to_string(), "-X^1^X^0");
    }
}
