//! Integer partitions: the index set of every basis in the crate.

use std::fmt;
use std::str::FromStr;

use smallvec::SmallVec;

use crate::error::{Error, Result};

/// Weakly decreasing positive parts; the empty partition has no parts.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Partition(SmallVec<[u32; 6]>);

impl Partition {
    pub fn empty() -> Self {
        Partition(SmallVec::new())
    }

    /// Checks the order; trailing zeros are dropped, interior zeros rejected.
    pub fn new(parts: &[u32]) -> Result<Self> {
        let mut v: SmallVec<[u32; 6]> = parts.iter().copied().collect();
        while v.last() == Some(&0) {
            v.pop();
        }
        if v.windows(2).any(|w| w[0] < w[1]) || v.contains(&0) {
            return Err(Error::Invalid(format!("{parts:?} is not a partition")));
        }
        Ok(Partition(v))
    }

    pub fn from_sorted(parts: &[u32]) -> Self {
        Self::new(parts).expect("parts must be weakly decreasing")
    }

    pub fn single(k: u32) -> Self {
        Self::from_sorted(&[k])
    }

    /// `(l^r)`: `r` parts equal to `l`.
    pub fn constant(l: u32, r: usize) -> Self {
        Self::from_sorted(&vec![l; r])
    }

    /// `((l+1)^i l^(r-i))`.
    pub fn padded(l: u32, i: usize, r: usize) -> Self {
        assert!(i <= r, "need i <= r");
        let mut v = vec![l + 1; i];
        v.extend(std::iter::repeat_n(l, r - i));
        Self::from_sorted(&v)
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn weight(&self) -> u32 {
        self.0.iter().sum()
    }

    /// Part `k` (1-based), 0 beyond the length.
    pub fn part(&self, k: usize) -> u32 {
        if k == 0 {
            return 0;
        }
        self.0.get(k - 1).copied().unwrap_or(0)
    }

    pub fn conjugate(&self) -> Self {
        let first = self.part(1);
        let v: Vec<u32> = (1..=first).map(|j| self.0.iter().filter(|&&p| p >= j).count() as u32).collect();
        Self::from_sorted(&v)
    }

    /// `lambda + (1^r)`.
    pub fn add_column(&self, r: usize) -> Self {
        let v: Vec<u32> = (1..=r.max(self.len())).map(|k| self.part(k) + u32::from(k <= r)).collect();
        Self::from_sorted(&v)
    }

    /// Fock indices `lambda_k - k + 1` for `k = 1..depth`.
    pub fn fock_indices(&self, depth: usize) -> Vec<i32> {
        (1..=depth).map(|k| self.part(k) as i32 - k as i32 + 1).collect()
    }

    /// Inverse of [`fock_indices`](Self::fock_indices) on any prefix length.
    pub fn from_fock_indices(idx: &[i32]) -> Result<Self> {
        if idx.windows(2).any(|w| w[0] <= w[1]) {
            return Err(Error::Invalid(format!("fock indices {idx:?} not strictly decreasing")));
        }
        let mut parts = Vec::with_capacity(idx.len());
        for (k, &a) in idx.iter().enumerate() {
            let p = a + k as i32;
            if p < 0 {
                return Err(Error::Invalid(format!("fock indices {idx:?} fall below the vacuum")));
            }
            parts.push(p as u32);
        }
        Self::new(&parts)
    }

    /// Exponents of `X^r(lambda) = X^(r-1+l1) ^ ... ^ X^(lr)`.
    pub fn wedge_exponents(&self, r: usize) -> Vec<i32> {
        assert!(self.len() <= r, "partition longer than the wedge degree");
        (1..=r).map(|k| (r - k) as i32 + self.part(k) as i32).collect()
    }

    /// Inverse of [`wedge_exponents`](Self::wedge_exponents).
    pub fn from_wedge_exponents(e: &[i32]) -> Result<Self> {
        let r = e.len();
        let mut parts = Vec::with_capacity(r);
        for (k, &a) in e.iter().enumerate() {
            let p = a - (r - 1 - k) as i32;
            if p < 0 {
                return Err(Error::Invalid(format!("exponents {e:?} are not strictly decreasing and nonnegative")));
            }
            parts.push(p as u32);
        }
        Self::new(&parts)
    }
}

/// All partitions with at most `r` parts and weight at most `w`; by weight,
/// then reverse lexicographic.
pub fn enumerate(r: usize, w: u32) -> Vec<Partition> {
    let mut out = Vec::new();
    for n in 0..=w {
        out.extend(of_weight(n, r));
    }
    out
}

/// Partitions of exactly `n` with at most `r` parts, reverse lexicographic.
pub fn of_weight(n: u32, r: usize) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut cur = Vec::new();
    fn go(rem: u32, max: u32, r: usize, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if rem == 0 {
            out.push(Partition::from_sorted(cur));
            return;
        }
        if cur.len() == r {
            return;
        }
        for p in (1..=max.min(rem)).rev() {
            cur.push(p);
            go(rem - p, p, r, cur, out);
            cur.pop();
        }
    }
    go(n, n, r, &mut cur, &mut out);
    out
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("-");
        }
        let s: Vec<String> = self.0.iter().map(|p| p.to_string()).collect();
        f.write_str(&s.join(","))
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({self})")
    }
}

impl FromStr for Partition {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s == "-" || s.is_empty() {
            return Ok(Partition::empty());
        }
        let parts: Vec<u32> = s
            .split(',')
            .map(|p| p.trim().parse::<u32>())
            .collect::<std::result::Result<_, _>>()
            .map_err(|_| Error::Parse(format!("bad partition {s:?}")))?;
        if parts.contains(&0) {
            return Err(Error::Parse(format!("bad partition {s:?}: zero part")));
        }
        Partition::new(&parts).map_err(|_| Error::Parse(format!("bad partition {s:?}: parts must not increase")))
    }
}

impl serde::Serialize for Partition {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> serde::Deserialize<'de> for Partition {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn enumerate_examples() {
        assert_eq!(enumerate(0, 5), vec![Partition::empty()]);
        assert_eq!(enumerate(2, 2), vec![p("-"), p("1"), p("2"), p("1,1")]);
        let e = enumerate(3, 4);
        let want: Vec<Partition> =
            ["-", "1", "2", "1,1", "3", "2,1", "1,1,1", "4", "3,1", "2,2", "2,1,1"].iter().map(|s| p(s)).collect();
        assert_eq!(e, want);
    }

    #[test]
    fn fock_examples() {
        assert_eq!(Partition::empty().fock_indices(3), vec![0, -1, -2]);
        assert_eq!(p("1").fock_indices(3), vec![1, -1, -2]);
        assert_eq!(p("2,2").fock_indices(4), vec![2, 1, -2, -3]);
        assert_eq!(Partition::from_fock_indices(&[2, 1, -2, -3]).unwrap(), p("2,2"));
    }

    #[test]
    fn constant_examples() {
        assert_eq!(Partition::constant(1, 3), p("1,1,1"));
        assert_eq!(Partition::padded(1, 2, 3), p("2,2,1"));
        assert_eq!(Partition::padded(0, 0, 2), Partition::empty());
        assert_eq!(Partition::padded(1, 2, 3).weight(), 5);
    }

    #[test]
    fn text_form() {
        assert_eq!(p("2,1,1").to_string(), "2,1,1");
        assert_eq!(Partition::empty().to_string(), "-");
        assert!("1,2".parse::<Partition>().is_err());
        assert!("a".parse::<Partition>().is_err());
        assert!("2,0".parse::<Partition>().is_err());
    }

    #[test]
    fn conjugate_and_wedge() {
        assert_eq!(p("3,1").conjugate(), p("2,1,1"));
        assert_eq!(p("2,1").wedge_exponents(3), vec![4, 2, 0]);
        assert_eq!(Partition::from_wedge_exponents(&[4, 2, 0]).unwrap(), p("2,1"));
        assert_eq!(p("1").add_column(2), p("2,1"));
    }
}
