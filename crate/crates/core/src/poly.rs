//! Sparse multivariate polynomials with exact rational coefficients.
//!
//! Three families of variables occur in the system: `e_j` (weight `j`),
//! `x_n` (weight `n`) and `t_k` (weight 1). A [`Var`] packs the family and
//! the index into 16 bits; ordering on the packed value puts all `e` before
//! all `x` before all `t`, each family by index.
//!
//! Terms are kept sorted by the graded lexicographic order (weighted degree
//! first, then lex on exponent vectors), leading term first. Zero
//! coefficients are never stored, so the zero polynomial is the empty term
//! list and equality is structural.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use rustc_hash::FxHashMap;
use serde::{Deserialize, Serialize};
use smallvec::SmallVec;

use crate::error::{Error, Result};
use crate::rational::Rational;

#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Var(u16);

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum VarKind {
    E,
    X,
    T,
}

const KIND_SHIFT: u16 = 12;
const INDEX_MASK: u16 = (1 << KIND_SHIFT) - 1;

impl Var {
    fn pack(kind: u16, index: u32) -> Var {
        assert!(index >= 1 && index <= INDEX_MASK as u32, "variable index {index} out of range");
        Var((kind << KIND_SHIFT) | index as u16)
    }

    pub fn e(j: u32) -> Var {
        Var::pack(1, j)
    }

    pub fn x(n: u32) -> Var {
        Var::pack(2, n)
    }

    pub fn t(k: u32) -> Var {
        Var::pack(3, k)
    }

    pub fn kind(self) -> VarKind {
        match self.0 >> KIND_SHIFT {
            1 => VarKind::E,
            2 => VarKind::X,
            _ => VarKind::T,
        }
    }

    pub fn index(self) -> u32 {
        (self.0 & INDEX_MASK) as u32
    }

    /// Grading weight: `e_j` and `x_n` weigh their index, `t_k` weighs 1.
    pub fn weight(self) -> u32 {
        match self.kind() {
            VarKind::E | VarKind::X => self.index(),
            VarKind::T => 1,
        }
    }

    pub fn is_t(self) -> bool {
        self.kind() == VarKind::T
    }

    pub fn name(self) -> String {
        let p = match self.kind() {
            VarKind::E => 'e',
            VarKind::X => 'x',
            VarKind::T => 't',
        };
        format!("{p}{}", self.index())
    }
}

impl fmt::Debug for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name())
    }
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name())
    }
}

impl FromStr for Var {
    type Err = Error;
    fn from_str(s: &str) -> Result<Var> {
        let bad = || Error::Parse(format!("unknown variable {s:?}"));
        let mut chars = s.chars();
        let head = chars.next().ok_or_else(bad)?;
        let idx: u32 = chars.as_str().parse().map_err(|_| bad())?;
        if idx == 0 || idx > INDEX_MASK as u32 {
            return Err(bad());
        }
        match head {
            'e' => Ok(Var::e(idx)),
            'x' => Ok(Var::x(idx)),
            't' => Ok(Var::t(idx)),
            _ => Err(bad()),
        }
    }
}

/// A power product; variables strictly increasing, exponents positive.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Monomial(SmallVec<[(Var, u16); 4]>);

impl Monomial {
    pub fn one() -> Self {
        Monomial(SmallVec::new())
    }

    pub fn var(v: Var) -> Self {
        Self::pow_of(v, 1)
    }

    pub fn pow_of(v: Var, e: u16) -> Self {
        let mut s = SmallVec::new();
        if e > 0 {
            s.push((v, e));
        }
        Monomial(s)
    }

    /// Builds from arbitrary `(var, exp)` pairs, merging repeats.
    pub fn from_pairs(pairs: &[(Var, u16)]) -> Self {
        let mut v: Vec<(Var, u16)> = pairs.iter().copied().filter(|p| p.1 > 0).collect();
        v.sort_by_key(|p| p.0);
        let mut out: SmallVec<[(Var, u16); 4]> = SmallVec::new();
        for (var, e) in v {
            match out.last_mut() {
                Some(last) if last.0 == var => last.1 += e,
                _ => out.push((var, e)),
            }
        }
        Monomial(out)
    }

    pub fn is_one(&self) -> bool {
        self.0.is_empty()
    }

    pub fn pairs(&self) -> &[(Var, u16)] {
        &self.0
    }

    pub fn exponent(&self, v: Var) -> u16 {
        self.0.iter().find(|p| p.0 == v).map_or(0, |p| p.1)
    }

    pub fn weight(&self) -> u32 {
        self.0.iter().map(|&(v, e)| v.weight() * e as u32).sum()
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().map(|&(_, e)| e as u32).sum()
    }

    pub fn t_degree(&self) -> u32 {
        self.0.iter().filter(|p| p.0.is_t()).map(|&(_, e)| e as u32).sum()
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let (a, b) = (&self.0, &other.0);
        let mut out = SmallVec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            match a[i].0.cmp(&b[j].0) {
                Ordering::Less => {
                    out.push(a[i]);
                    i += 1;
                }
                Ordering::Greater => {
                    out.push(b[j]);
                    j += 1;
                }
                Ordering::Equal => {
                    out.push((a[i].0, a[i].1 + b[j].1));
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&a[i..]);
        out.extend_from_slice(&b[j..]);
        Monomial(out)
    }

    /// `self / other` when `other` divides `self`.
    pub fn div(&self, other: &Monomial) -> Option<Monomial> {
        let mut out = SmallVec::new();
        let mut j = 0;
        for &(v, e) in &self.0 {
            if j < other.0.len() && other.0[j].0 < v {
                return None;
            }
            if j < other.0.len() && other.0[j].0 == v {
                let oe = other.0[j].1;
                j += 1;
                match e.cmp(&oe) {
                    Ordering::Less => return None,
                    Ordering::Equal => {}
                    Ordering::Greater => out.push((v, e - oe)),
                }
            } else {
                out.push((v, e));
            }
        }
        if j < other.0.len() {
            return None;
        }
        Some(Monomial(out))
    }

    /// Splits into the part on variables selected by `pred` and the rest.
    pub fn split(&self, pred: impl Fn(Var) -> bool) -> (Monomial, Monomial) {
        let mut a = SmallVec::new();
        let mut b = SmallVec::new();
        for &p in &self.0 {
            if pred(p.0) {
                a.push(p);
            } else {
                b.push(p);
            }
        }
        (Monomial(a), Monomial(b))
    }

    /// Lex comparison on exponent vectors, ignoring degree.
    pub fn cmp_lex(&self, other: &Monomial) -> Ordering {
        let (a, b) = (&self.0, &other.0);
        let (mut i, mut j) = (0, 0);
        loop {
            match (a.get(i), b.get(j)) {
                (None, None) => return Ordering::Equal,
                (Some(_), None) => return Ordering::Greater,
                (None, Some(_)) => return Ordering::Less,
                (Some(&(va, ea)), Some(&(vb, eb))) => match va.cmp(&vb) {
                    Ordering::Less => return Ordering::Greater,
                    Ordering::Greater => return Ordering::Less,
                    Ordering::Equal => {
                        if ea != eb {
                            return ea.cmp(&eb);
                        }
                        i += 1;
                        j += 1;
                    }
                },
            }
        }
    }
}

impl Ord for Monomial {
    /// Graded lex: weighted degree, then lex.
    fn cmp(&self, other: &Self) -> Ordering {
        self.weight().cmp(&other.weight()).then_with(|| self.cmp_lex(other))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("1");
        }
        for (k, &(v, e)) in self.0.iter().enumerate() {
            if k > 0 {
                f.write_str("*")?;
            }
            if e == 1 {
                write!(f, "{v}")?;
            } else {
                write!(f, "{v}^{e}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Sparse polynomial; terms sorted leading first, never a zero coefficient.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct MultiPoly {
    terms: Vec<(Monomial, Rational)>,
}

impl MultiPoly {
    pub fn zero() -> Self {
        MultiPoly { terms: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    pub fn constant(q: Rational) -> Self {
        Self::term(Monomial::one(), q)
    }

    pub fn int(n: i64) -> Self {
        Self::constant(Rational::from_int(n))
    }

    pub fn var(v: Var) -> Self {
        Self::term(Monomial::var(v), Rational::one())
    }

    pub fn term(m: Monomial, q: Rational) -> Self {
        if q.is_zero() {
            return Self::zero();
        }
        MultiPoly { terms: vec![(m, q)] }
    }

    /// Collects arbitrary terms, combining repeats and dropping zeros.
    pub fn from_terms(it: impl IntoIterator<Item = (Monomial, Rational)>) -> Self {
        let mut acc: FxHashMap<Monomial, Rational> = FxHashMap::default();
        for (m, q) in it {
            if q.is_zero() {
                continue;
            }
            match acc.get_mut(&m) {
                Some(c) => *c += &q,
                None => {
                    acc.insert(m, q);
                }
            }
        }
        Self::from_map(acc)
    }

    fn from_map(acc: FxHashMap<Monomial, Rational>) -> Self {
        let mut terms: Vec<(Monomial, Rational)> = acc.into_iter().filter(|(_, q)| !q.is_zero()).collect();
        terms.sort_by(|a, b| b.0.cmp(&a.0));
        MultiPoly { terms }
    }

    pub fn terms(&self) -> &[(Monomial, Rational)] {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].0.is_one() && self.terms[0].1.is_one()
    }

    /// The rational value when the polynomial has no variables.
    pub fn as_constant(&self) -> Option<Rational> {
        match self.terms.as_slice() {
            [] => Some(Rational::zero()),
            [(m, q)] if m.is_one() => Some(q.clone()),
            _ => None,
        }
    }

    pub fn constant_term(&self) -> Rational {
        self.coeff(&Monomial::one())
    }

    pub fn coeff(&self, m: &Monomial) -> Rational {
        self.terms
            .binary_search_by(|probe| m.cmp(&probe.0))
            .map(|i| self.terms[i].1.clone())
            .unwrap_or_else(|_| Rational::zero())
    }

    pub fn leading(&self) -> Option<&(Monomial, Rational)> {
        self.terms.first()
    }

    /// The common weighted degree of all terms, if the polynomial is isobaric.
    pub fn isobaric_weight(&self) -> Option<u32> {
        let w = self.terms.first()?.0.weight();
        self.terms.iter().all(|t| t.0.weight() == w).then_some(w)
    }

    pub fn max_t_degree(&self) -> u32 {
        self.terms.iter().map(|t| t.0.t_degree()).max().unwrap_or(0)
    }

    pub fn vars(&self) -> Vec<Var> {
        let mut v: Vec<Var> = self.terms.iter().flat_map(|t| t.0.pairs().iter().map(|p| p.0)).collect();
        v.sort();
        v.dedup();
        v
    }

    pub fn only_vars(&self, pred: impl Fn(Var) -> bool) -> bool {
        self.terms.iter().all(|t| t.0.pairs().iter().all(|p| pred(p.0)))
    }

    pub fn neg(&self) -> Self {
        MultiPoly { terms: self.terms.iter().map(|(m, q)| (m.clone(), -q)).collect() }
    }

    pub fn scale(&self, q: &Rational) -> Self {
        if q.is_zero() {
            return Self::zero();
        }
        MultiPoly { terms: self.terms.iter().map(|(m, c)| (m.clone(), c * q)).collect() }
    }

    pub fn mul_monomial(&self, m: &Monomial) -> Self {
        // Multiplying by a monomial preserves the order.
        MultiPoly { terms: self.terms.iter().map(|(a, c)| (a.mul(m), c.clone())).collect() }
    }

    pub fn add(&self, other: &Self) -> Self {
        let (a, b) = (&self.terms, &other.terms);
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            match a[i].0.cmp(&b[j].0) {
                Ordering::Greater => {
                    out.push(a[i].clone());
                    i += 1;
                }
                Ordering::Less => {
                    out.push(b[j].clone());
                    j += 1;
                }
                Ordering::Equal => {
                    let s = &a[i].1 + &b[j].1;
                    if !s.is_zero() {
                        out.push((a[i].0.clone(), s));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&a[i..]);
        out.extend_from_slice(&b[j..]);
        MultiPoly { terms: out }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn add_assign(&mut self, other: &Self) {
        if other.is_zero() {
            return;
        }
        *self = self.add(other);
    }

    pub fn mul(&self, other: &Self) -> Self {
        self.mul_trunc(other, None)
    }

    /// Product keeping only terms of t-degree at most `tcap`.
    pub fn mul_trunc(&self, other: &Self, tcap: Option<u32>) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        if let Some(q) = other.as_constant() {
            return self.scale(&q).truncate_t(tcap);
        }
        if let Some(q) = self.as_constant() {
            return other.scale(&q).truncate_t(tcap);
        }
        let mut acc: FxHashMap<Monomial, Rational> = FxHashMap::default();
        acc.reserve(self.len() * other.len() / 2 + 1);
        let bt: Vec<u32> = other.terms.iter().map(|t| t.0.t_degree()).collect();
        for (ma, qa) in &self.terms {
            let da = ma.t_degree();
            for ((mb, qb), &db) in other.terms.iter().zip(&bt) {
                if let Some(cap) = tcap {
                    if da + db > cap {
                        continue;
                    }
                }
                let m = ma.mul(mb);
                let q = qa * qb;
                match acc.get_mut(&m) {
                    Some(c) => *c += &q,
                    None => {
                        acc.insert(m, q);
                    }
                }
            }
        }
        Self::from_map(acc)
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    pub fn truncate_t(&self, tcap: Option<u32>) -> Self {
        match tcap {
            None => self.clone(),
            Some(c) => MultiPoly {
                terms: self.terms.iter().filter(|t| t.0.t_degree() <= c).cloned().collect(),
            },
        }
    }

    /// Keeps only the terms of the given t-degree.
    pub fn t_homogeneous(&self, d: u32) -> Self {
        MultiPoly { terms: self.terms.iter().filter(|t| t.0.t_degree() == d).cloned().collect() }
    }

    /// Drops every term that involves a variable rejected by `keep`.
    pub fn project(&self, keep: impl Fn(Var) -> bool) -> Self {
        MultiPoly {
            terms: self.terms.iter().filter(|t| t.0.pairs().iter().all(|p| keep(p.0))).cloned().collect(),
        }
    }

    /// Replaces each variable for which `f` returns a value.
    pub fn substitute(&self, f: &dyn Fn(Var) -> Option<MultiPoly>) -> Self {
        let mut images: FxHashMap<Var, Option<MultiPoly>> = FxHashMap::default();
        let mut powers: FxHashMap<(Var, u16), MultiPoly> = FxHashMap::default();
        let mut out = Self::zero();
        let mut pieces = Vec::new();
        for (m, q) in &self.terms {
            let mut kept = Vec::new();
            let mut prod = MultiPoly::constant(q.clone());
            for &(v, e) in m.pairs() {
                let img = images.entry(v).or_insert_with(|| f(v)).clone();
                match img {
                    None => kept.push((v, e)),
                    Some(p) => {
                        let pw = powers.entry((v, e)).or_insert_with(|| p.pow(e as u32)).clone();
                        prod = prod.mul(&pw);
                    }
                }
            }
            pieces.push(prod.mul_monomial(&Monomial::from_pairs(&kept)));
        }
        for p in pieces {
            out.add_assign(&p);
        }
        out
    }

    pub fn derivative(&self, v: Var) -> Self {
        Self::from_terms(self.terms.iter().filter_map(|(m, q)| {
            let e = m.exponent(v);
            if e == 0 {
                return None;
            }
            let rest = m.div(&Monomial::var(v)).expect("exponent checked");
            Some((rest, q * &Rational::from_int(e as i64)))
        }))
    }

    /// Exact quotient `self / d`; fails when `d` does not divide `self`.
    pub fn div_exact(&self, d: &MultiPoly) -> Result<MultiPoly> {
        let (lm, lc) = d
            .leading()
            .cloned()
            .ok_or_else(|| Error::InexactDivision("division by zero polynomial".into()))?;
        let mut rem = self.clone();
        let mut quot = Vec::new();
        while let Some((m, c)) = rem.leading().cloned() {
            let qm = m.div(&lm).ok_or_else(|| {
                Error::InexactDivision(format!("leading term {m} not divisible by {lm}"))
            })?;
            let qc = &c / &lc;
            rem = rem.sub(&d.mul_monomial(&qm).scale(&qc));
            quot.push((qm, qc));
        }
        Ok(Self::from_terms(quot))
    }

    /// Groups terms by their restriction to the variables chosen by `pred`;
    /// each group carries the remaining cofactor.
    pub fn group_by(&self, pred: impl Fn(Var) -> bool + Copy) -> BTreeMap<Monomial, MultiPoly> {
        let mut g: BTreeMap<Monomial, Vec<(Monomial, Rational)>> = BTreeMap::new();
        for (m, q) in &self.terms {
            let (a, b) = m.split(pred);
            g.entry(a).or_default().push((b, q.clone()));
        }
        g.into_iter().map(|(k, v)| (k, Self::from_terms(v))).collect()
    }

    pub fn map_coeffs(&self, f: impl Fn(&Rational) -> Rational) -> Self {
        Self::from_terms(self.terms.iter().map(|(m, q)| (m.clone(), f(q))))
    }

    /// Canonical text form, e.g. `3/2*e1^2*t1 - e2`.
    pub fn to_text(&self) -> String {
        self.to_string()
    }

    pub fn to_json(&self) -> PolyJson {
        let vars = self.vars();
        let terms = self
            .terms
            .iter()
            .map(|(m, q)| TermJson {
                exps: vars.iter().map(|&v| m.exponent(v) as u32).collect(),
                num: q.numer().to_string(),
                den: q.denom().to_string(),
            })
            .collect();
        PolyJson { vars: vars.iter().map(|v| v.name()).collect(), terms }
    }

    pub fn from_json(j: &PolyJson) -> Result<MultiPoly> {
        let vars: Vec<Var> = j.vars.iter().map(|s| s.parse()).collect::<Result<_>>()?;
        let mut terms = Vec::new();
        for t in &j.terms {
            if t.exps.len() != vars.len() {
                return Err(Error::Parse("exponent vector length does not match vars".into()));
            }
            let q: Rational = format!("{}/{}", t.num, t.den).parse().map_err(|e| Error::Parse(format!("{e}")))?;
            let pairs: Vec<(Var, u16)> = vars
                .iter()
                .zip(&t.exps)
                .map(|(&v, &e)| u16::try_from(e).map(|e| (v, e)))
                .collect::<std::result::Result<_, _>>()
                .map_err(|_| Error::Parse("exponent too large".into()))?;
            terms.push((Monomial::from_pairs(&pairs), q));
        }
        Ok(Self::from_terms(terms))
    }
}


/// Determinant by Laplace expansion along rows, memoized on the set of
/// columns still free. Fine for the small matrices used here.
pub fn determinant(m: &[Vec<MultiPoly>]) -> MultiPoly {
    let n = m.len();
    if n == 0 {
        return MultiPoly::one();
    }
    assert!(n <= 16 && m.iter().all(|row| row.len() == n), "square matrix of size <= 16 expected");
    let mut memo: FxHashMap<u32, MultiPoly> = FxHashMap::default();
    fn go(m: &[Vec<MultiPoly>], row: usize, used: u32, memo: &mut FxHashMap<u32, MultiPoly>) -> MultiPoly {
        let n = m.len();
        if row == n {
            return MultiPoly::one();
        }
        if let Some(v) = memo.get(&used) {
            return v.clone();
        }
        let mut acc = MultiPoly::zero();
        let mut sign_neg = false;
        for c in 0..n {
            if used & (1 << c) != 0 {
                continue;
            }
            let entry = &m[row][c];
            if !entry.is_zero() {
                let minor = go(m, row + 1, used | (1 << c), memo);
                let t = entry.mul(&minor);
                acc = if sign_neg { acc.sub(&t) } else { acc.add(&t) };
            }
            sign_neg = !sign_neg;
        }
        memo.insert(used, acc.clone());
        acc
    }
    go(m, 0, 0, &mut memo)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PolyJson {
    pub vars: Vec<String>,
    pub terms: Vec<TermJson>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermJson {
    pub exps: Vec<u32>,
    pub num: String,
    pub den: String,
}

impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (k, (m, q)) in self.terms.iter().enumerate() {
            let neg = q.is_negative();
            let a = q.abs();
            match (k, neg) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            if m.is_one() {
                write!(f, "{a}")?;
            } else if a.is_one() {
                write!(f, "{m}")?;
            } else {
                write!(f, "{a}*{m}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl FromStr for MultiPoly {
    type Err = Error;

    fn from_str(s: &str) -> Result<MultiPoly> {
        let s: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if s.is_empty() {
            return Err(Error::Parse("empty polynomial".into()));
        }
        let mut terms = Vec::new();
        let bytes = s.as_bytes();
        let mut start = 0;
        let mut i = 0;
        while i <= bytes.len() {
            let at_split = i == bytes.len() || ((bytes[i] == b'+' || bytes[i] == b'-') && i > start);
            // A sign right after '^' belongs to nothing we accept; reject below.
            if at_split {
                terms.push(parse_term(&s[start..i])?);
                start = i;
            }
            i += 1;
        }
        Ok(MultiPoly::from_terms(terms))
    }
}

fn parse_term(t: &str) -> Result<(Monomial, Rational)> {
    let bad = || Error::Parse(format!("malformed term {t:?}"));
    let (sign, body) = match t.as_bytes().first() {
        Some(b'-') => (-1, &t[1..]),
        Some(b'+') => (1, &t[1..]),
        _ => (1, t),
    };
    if body.is_empty() {
        return Err(bad());
    }
    let mut coef = Rational::from_int(sign);
    let mut pairs = Vec::new();
    for f in body.split('*') {
        if f.is_empty() {
            return Err(bad());
        }
        if f.as_bytes()[0].is_ascii_digit() {
            let q: Rational = f.parse().map_err(|_| bad())?;
            coef = &coef * &q;
        } else {
            let (name, e) = match f.split_once('^') {
                Some((n, e)) => (n, e.parse::<u16>().map_err(|_| bad())?),
                None => (f, 1),
            };
            pairs.push((name.parse::<Var>()?, e));
        }
    }
    Ok((Monomial::from_pairs(&pairs), coef))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> MultiPoly {
        s.parse().unwrap()
    }

    #[test]
    fn text_roundtrip() {
        for s in ["0", "1", "-e2", "3/2*e1^2*t1 - e2", "x1^2 + x2", "-1/2*x1^2 + x2 - 7"] {
            let q = p(s);
            assert_eq!(q.to_text().parse::<MultiPoly>().unwrap(), q);
        }
        assert_eq!(p("e2 + e1^2").to_text(), "e1^2 + e2");
        assert_eq!(p("3/2*e1^2*t1 - e2").to_text(), "3/2*e1^2*t1 - e2");
        assert!("e0".parse::<MultiPoly>().is_err());
        assert!("e1**e2".parse::<MultiPoly>().is_err());
    }

    #[test]
    fn zero_stripped() {
        assert!(p("e1 - e1").is_zero());
        assert_eq!(p("e1 + e2").sub(&p("e2")), p("e1"));
    }

    #[test]
    fn json_roundtrip() {
        let q = p("3/2*e1^2*t1 - e2 + 5");
        let j = q.to_json();
        assert_eq!(j.vars, vec!["e1", "e2", "t1"]);
        assert_eq!(MultiPoly::from_json(&j).unwrap(), q);
    }

    #[test]
    fn products_and_division() {
        let a = p("t1 - t2");
        let b = p("t1^2 + t1*t2 + 3*t2");
        let c = a.mul(&b);
        assert_eq!(c.div_exact(&a).unwrap(), b);
        assert!(b.div_exact(&a).is_err());
        assert_eq!(p("e1 + t1").mul_trunc(&p("e1 + t1"), Some(1)), p("e1^2 + 2*e1*t1"));
    }

    #[test]
    fn weights_and_derivatives() {
        assert_eq!(p("e1^2 - e2").isobaric_weight(), Some(2));
        assert_eq!(p("e1 - e2").isobaric_weight(), None);
        assert_eq!(p("x1^3 + x1*x2").derivative(Var::x(1)), p("3*x1^2 + x2"));
        let s = p("e1^2 - e2").substitute(&|v| (v == Var::e(1)).then(|| p("t1 + t2")));
        assert_eq!(s, p("t1^2 + 2*t1*t2 + t2^2 - e2"));
    }
}
