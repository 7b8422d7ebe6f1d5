//! The `gl(V)` action on `B_r` and its structural series.
//!
//! The star product transports `X^i (x) d^j` from `wedge^r V` to `B_r`
//! through `D_lambda(H_r) <-> X^r(lambda)`. [`star_oracle`] computes it by
//! brute force. Two closed forms are checked against it: the per-partition
//! two-row determinant [`gs_closed_form`] and the full generating series
//! [`thm_a_series`], whose `z^i w^-j s_lambda(t)` coefficient should be the
//! image of `D_lambda` under `X^i (x) d^j`.

use std::collections::BTreeMap;

use crate::br::{self, from_delta_basis};
use crate::error::{Error, Result};
use crate::exterior::{sort_sign, Key, Wedge};
use crate::laurent::{product_to, Factor, LaurentSeries, Window};
use crate::partition::Partition;
use crate::poly::{MultiPoly, Var};
use crate::rational::Rational;
use crate::schubert::{Op, SeriesWedge, Slot};
use crate::series::PowerSeries;
use crate::symfunc::{complete_h, elementary_e, power_p, to_schur_basis_coeffs};

/// `X^i ^ (d^j _| X^r(lambda))` in the basis `X^r(mu)`.
pub fn star_oracle_coeffs(i: u32, j: u32, lambda: &Partition, r: usize) -> BTreeMap<Partition, Rational> {
    let u: Wedge<Rational> = Wedge::basis(lambda, r);
    let v = Wedge::vector(i as i32).wedge(&u.contract(j as i32));
    v.to_partitions()
}

/// The star image `(X^i (x) d^j) * D_lambda(H_r)` as an element of `B_r`.
pub fn star_oracle(i: u32, j: u32, lambda: &Partition, r: usize) -> MultiPoly {
    from_delta_basis(&star_oracle_coeffs(i, j, lambda, r), r)
}

/// The star action extended linearly to `sum c_mu D_mu`.
pub fn star_apply(i: u32, j: u32, f: &BTreeMap<Partition, Rational>, r: usize) -> BTreeMap<Partition, Rational> {
    let mut out: BTreeMap<Partition, Rational> = BTreeMap::new();
    for (mu, c) in f {
        for (nu, q) in star_oracle_coeffs(i, j, mu, r) {
            let e = out.entry(nu).or_insert_with(Rational::zero);
            *e = &*e + &(c * &q);
        }
    }
    out.retain(|_, q| !q.is_zero());
    out
}

/// `(z^(r-1)/w^(r-1)) sigma_+(z) sigma-bar_-(z)` applied to the two-row
/// determinant with columns `(w^(k-1-lambda_k), X^(r-k+1+lambda_k))`,
/// `k = 1..r`, and a last column `(0, X^0)`; exact for `z`-exponents up to
/// `zcap`. The coefficient of `z^i w^-j` is `X^i ^ (d^j _| X^r(lambda))`.
pub fn gs_closed_form(lambda: &Partition, r: usize, zcap: i32) -> Result<SeriesWedge> {
    if lambda.len() > r {
        return Err(Error::Invalid(format!("({lambda}) has more than {r} parts")));
    }
    let bottom: Vec<i32> = (1..=r).map(|k| (r - k + 1) as i32 + lambda.part(k) as i32).collect();
    let mut det = SeriesWedge::zero(None);
    for i in 1..=r {
        let top = i as i32 - 1 - lambda.part(i) as i32;
        let mut k: Key = bottom.iter().enumerate().filter(|&(c, _)| c + 1 != i).map(|(_, &e)| e).collect();
        k.push(0);
        let Some(odd) = sort_sign(&mut k) else { continue };
        let sign = if odd ^ (i % 2 == 0) { -1 } else { 1 };
        det.add_cell(0, top, k, MultiPoly::int(sign));
    }
    let shift = r as i32 - 1;
    let s = det.apply(Op::BarMinus, Slot::Z)?.with_zcap(zcap - shift).apply(Op::Plus, Slot::Z)?;
    Ok(s.shift(shift, -shift))
}

/// `E_r(w) + (-1)^(r+1) e_r w^r prod_k (1 - t_k/w)`.
pub fn frak_e(r: usize) -> LaurentSeries {
    let mut cells = Vec::new();
    for m in 0..=r {
        let em = if m == 0 { MultiPoly::one() } else { MultiPoly::var(Var::e(m as u32)) };
        cells.push(((0, m as i32), em.scale(&Rational::sign(m as i64))));
        let er = MultiPoly::var(Var::e(r as u32)).scale(&Rational::sign(r as i64 + 1 + m as i64));
        cells.push(((0, (r - m) as i32), er.mul(&elementary_e(m as u32, r))));
    }
    LaurentSeries::from_cells(cells)
}

/// `exp(sum_n x_n(e) p_n(t_r))` graded by t-degree, up to `order`.
fn cauchy_x(r: usize, order: usize) -> Result<PowerSeries> {
    let arg = PowerSeries::from_fn(order, |n| if n == 0 { MultiPoly::zero() } else { br::x_of(n as u32, r).mul(&power_p(n as u32, r)) });
    arg.exp(order, None)
}

/// The closed-form structural series of `gl(V)` on `B_r`,
///
/// ```text
/// (z^(r-1)/w^(r-1)) exp(sum_n p_n(t)(w^-n - z^-n)/n + x_n (z^n + p_n(t))) E(w, t)
/// ```
///
/// computed exactly on `target`.
pub fn thm_a_series(r: usize, target: Window) -> Result<LaurentSeries> {
    if target.tcap.is_none() {
        return Err(Error::Window("the structural series needs a t-degree cap".into()));
    }
    let shift = r as i32 - 1;
    let factors = vec![
        Factor::fixed(LaurentSeries::monomial(shift, -shift, MultiPoly::one())),
        Factor::ray((0, -1), 1, move |n| Ok(PowerSeries::from_fn(n, |k| complete_h(k as u32, r))))?,
        Factor::ray((-1, 0), 1, move |n| {
            Ok(PowerSeries::from_fn(n, |k| elementary_e(k as u32, r).scale(&Rational::sign(k as i64))))
        })?,
        Factor::ray((1, 0), 0, move |n| Ok(PowerSeries::from_fn(n, |k| br::h_of(k as i64, r))))?,
        Factor::ray((0, 0), 1, move |n| cauchy_x(r, n))?,
        Factor::fixed(frak_e(r)),
    ];
    product_to(&factors, target)
}

/// Sweep-sized window for `0 <= i <= imax`, `0 <= j <= jmax`, with every
/// negative `z`-exponent the series can reach at the t-degree cap.
pub fn thm_a_window(r: usize, imax: u32, jmax: u32, tcap: u32) -> Window {
    let zlo = (r as i32 - 1 - tcap as i32).min(0);
    Window::new(zlo, imax as i32, -(jmax as i32), 0, Some(tcap))
}

/// The `z^i w^-j` slice of the structural series, split by `s_lambda(t)`.
pub fn thm_a_slice(series: &LaurentSeries, i: u32, j: u32, r: usize) -> Result<BTreeMap<Partition, MultiPoly>> {
    let c = series.coefficient(i as i32, -(j as i32))?;
    to_schur_basis_coeffs(&c, r)
}

/// Cells with `z^a`, `a < 0`, that fail to vanish.
pub fn negative_power_residue(series: &LaurentSeries) -> Vec<((i32, i32), MultiPoly)> {
    series.cells().iter().filter(|((a, _), _)| *a < 0).map(|(k, p)| (*k, p.clone())).collect()
}

/// Checks `M(N p) - N(M p) = [M, N] p` on `p = D_lambda` with
/// `[X^i d^j, X^k d^l] = delta_jk X^i d^l - delta_li X^k d^j`.
pub fn bracket_check(m: (u32, u32), n: (u32, u32), lambda: &Partition, r: usize) -> std::result::Result<(), String> {
    let p = BTreeMap::from([(lambda.clone(), Rational::one())]);
    let lhs_a = star_apply(m.0, m.1, &star_apply(n.0, n.1, &p, r), r);
    let lhs_b = star_apply(n.0, n.1, &star_apply(m.0, m.1, &p, r), r);
    let lhs = from_delta_basis(&lhs_a, r).sub(&from_delta_basis(&lhs_b, r));
    let mut rhs = MultiPoly::zero();
    if m.1 == n.0 {
        rhs.add_assign(&from_delta_basis(&star_apply(m.0, n.1, &p, r), r));
    }
    if n.1 == m.0 {
        rhs = rhs.sub(&from_delta_basis(&star_apply(n.0, m.1, &p, r), r));
    }
    if lhs == rhs {
        Ok(())
    } else {
        Err(format!("M={m:?} N={n:?} lambda=({lambda}) r={r}: commutator {lhs} but bracket {rhs}"))
    }
}

/// The wedge at `z^i w^-j` of the closed form, in the basis `X^r(mu)`.
pub fn gs_coeffs(s: &SeriesWedge, i: u32, j: u32, r: usize) -> Result<BTreeMap<Partition, Rational>> {
    let w = s.wedge_at(i as i32, -(j as i32), r)?;
    let mut out = BTreeMap::new();
    for (mu, c) in w.to_partitions() {
        let q = c.as_constant().ok_or_else(|| Error::Invalid(format!("non-scalar coefficient {c}")))?;
        out.insert(mu, q);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition::enumerate;

    fn part(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn oracle_examples() {
        assert_eq!(star_oracle(0, 0, &Partition::empty(), 2), MultiPoly::one());
        assert_eq!(star_oracle(2, 1, &Partition::empty(), 2), "e1".parse().unwrap());
        for m in 0..4u32 {
            for j in 0..4u32 {
                let want = if j == m { "e1^2".parse().unwrap() } else { MultiPoly::zero() };
                assert_eq!(star_oracle(2, j, &Partition::from_sorted(&[m]), 1), want);
            }
        }
    }

    #[test]
    fn closed_form_matches_oracle() {
        for r in 1..=3 {
            for lambda in enumerate(r, 3) {
                let s = gs_closed_form(&lambda, r, 4).unwrap();
                for i in 0..=4 {
                    for j in 0..=4 {
                        assert_eq!(gs_coeffs(&s, i, j, r).unwrap(), star_oracle_coeffs(i, j, &lambda, r), "r={r} ({lambda}) {i},{j}");
                    }
                }
            }
        }
    }

    #[test]
    fn two_column_example() {
        for l in ["1", "2,1", "3,3"] {
            let lambda = part(l);
            let (l1, l2) = (lambda.part(1) as i32, lambda.part(2) as i32);
            let zcap = 6;
            let mut left = SeriesWedge::zero(None);
            left.add_cell(0, -l2, Key::from_slice(&[1 + l1]), MultiPoly::one());
            left.add_cell(0, -1 - l1, Key::from_slice(&[l2]), MultiPoly::int(-1));
            let want = left.wedge(&SeriesWedge::generating_vector(zcap, None));
            let got = gs_closed_form(&lambda, 2, zcap).unwrap();
            assert_eq!(got.difference(&want), None, "({l})");
        }
    }

    #[test]
    fn frak_e_at_two() {
        let f = frak_e(2);
        assert_eq!(f.coefficient(0, 0).unwrap(), "1 - e2*t1*t2".parse().unwrap());
        assert_eq!(f.coefficient(0, 1).unwrap(), "-e1 + e2*t1 + e2*t2".parse().unwrap());
        assert_eq!(f.coefficient(0, 2).unwrap(), MultiPoly::zero());
    }

    #[test]
    fn bracket_small() {
        assert!(bracket_check((1, 0), (0, 1), &part("1"), 2).is_ok());
        assert!(bracket_check((2, 2), (2, 2), &part("2,1"), 3).is_ok());
    }
}
