//! Randomized invariants. Every property is exact; proptest only picks the inputs.

use std::collections::BTreeMap;

use proptest::prelude::*;

use glrep::djkm::{boson_fermion, fermion_boson, fock_bracket_check, FockElement};
use glrep::exterior::Wedge;
use glrep::gl_finite::{bracket_check, gs_closed_form, gs_coeffs, star_oracle_coeffs};
use glrep::partition::enumerate;
use glrep::poly::PolyJson;
use glrep::sweep::Exec;
use glrep::{LaurentSeries, Monomial, MultiPoly, Partition, PowerSeries, Rational, Var, Window};

fn partition(max_len: usize, max_part: u32) -> impl Strategy<Value = Partition> {
    prop::collection::vec(1..=max_part, 0..=max_len).prop_map(|mut v| {
        v.sort_unstable_by(|a, b| b.cmp(a));
        Partition::new(&v).unwrap()
    })
}

fn rational() -> impl Strategy<Value = Rational> {
    (-9i64..=9, 1i64..=4).prop_map(|(n, d)| Rational::new(n, d))
}

fn var() -> impl Strategy<Value = Var> {
    prop_oneof![(1u32..=3).prop_map(Var::e), (1u32..=4).prop_map(Var::x), (1u32..=3).prop_map(Var::t)]
}

fn poly() -> impl Strategy<Value = MultiPoly> {
    prop::collection::vec((prop::collection::vec((var(), 1u16..=3), 0..=3), rational()), 0..=5).prop_map(|terms| {
        MultiPoly::from_terms(terms.into_iter().map(|(pairs, q)| {
            let m = pairs.iter().fold(Monomial::one(), |m, &(v, e)| m.mul(&Monomial::pow_of(v, e)));
            (m, q)
        }))
    })
}

fn e_poly() -> impl Strategy<Value = MultiPoly> {
    prop::collection::vec(((0u16..=2), (0u16..=2), rational()), 0..=4).prop_map(|terms| {
        MultiPoly::from_terms(terms.into_iter().map(|(a, b, q)| {
            let m = Monomial::pow_of(Var::e(1), a).mul(&Monomial::pow_of(Var::e(2), b));
            (m, q)
        }))
    })
}

fn series(order: usize, c0: i64) -> impl Strategy<Value = PowerSeries> {
    prop::collection::vec(e_poly(), order).prop_map(move |tail| {
        let mut cs = vec![MultiPoly::int(c0)];
        cs.extend(tail);
        PowerSeries::new(cs, order)
    })
}

fn cells() -> impl Strategy<Value = BTreeMap<(i32, i32), MultiPoly>> {
    prop::collection::btree_map((-3i32..=3, -3i32..=3), e_poly(), 0..=6)
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 64, ..ProptestConfig::default() })]

    #[test]
    fn partition_text_round_trip(p in partition(6, 7)) {
        let back: Partition = p.to_string().parse().unwrap();
        prop_assert_eq!(back, p);
    }

    #[test]
    fn poly_text_and_json_round_trip(p in poly()) {
        let back: MultiPoly = p.to_text().parse().unwrap();
        prop_assert_eq!(&back, &p);
        let j: PolyJson = serde_json::from_str(&serde_json::to_string(&p.to_json()).unwrap()).unwrap();
        prop_assert_eq!(MultiPoly::from_json(&j).unwrap(), p);
    }

    #[test]
    fn exp_log_inverse(f in series(6, 0), g in series(6, 1)) {
        let n = 6;
        prop_assert_eq!(f.exp(n, None).unwrap().log(n, None).unwrap(), f.clone());
        let inv = g.inverse(n, None).unwrap();
        prop_assert_eq!(g.mul(&inv, None), PowerSeries::one(n));
        // exp is a homomorphism from addition to multiplication
        let lg = g.log(n, None).unwrap();
        prop_assert_eq!(f.add(&lg).exp(n, None).unwrap(), f.exp(n, None).unwrap().mul(&g, None));
    }

    #[test]
    fn complete_laurent_product_is_convolution(p in cells(), q in cells(), r in cells()) {
        let (a, b, c) = (LaurentSeries::from_cells(p.clone()), LaurentSeries::from_cells(q.clone()), LaurentSeries::from_cells(r));
        let ab = a.mul(&b).unwrap();
        let mut naive: BTreeMap<(i32, i32), MultiPoly> = BTreeMap::new();
        for (&(i, j), x) in &p {
            for (&(k, l), y) in &q {
                naive.entry((i + k, j + l)).or_insert_with(MultiPoly::zero).add_assign(&x.mul(y));
            }
        }
        for (&(i, j), want) in &naive {
            prop_assert_eq!(&ab.coefficient(i, j).unwrap(), want);
        }
        prop_assert_eq!(ab.mul(&c).unwrap(), a.mul(&b.mul(&c).unwrap()).unwrap());
        prop_assert_eq!(ab, b.mul(&a).unwrap());
    }

    #[test]
    fn restricted_products_agree_where_sound(p in cells(), q in cells(), zhi in -1i32..=3, whi in -1i32..=3) {
        let w = Window::new(-3, zhi, -3, whi, None);
        let full = LaurentSeries::from_cells(p.clone()).mul(&LaurentSeries::from_cells(q.clone())).unwrap();
        let a = LaurentSeries::from_cells(p).restrict(w).unwrap();
        let b = LaurentSeries::from_cells(q).restrict(w).unwrap();
        if let Ok(s) = a.mul(&b) {
            for (i, j) in s.window().cells() {
                prop_assert_eq!(s.coefficient(i, j).unwrap(), full.coefficient(i, j).unwrap());
            }
        }
    }

    #[test]
    fn wedge_is_alternating(a in -4i32..=6, b in -4i32..=6, c in -4i32..=6) {
        let (x, y, z) = (Wedge::<Rational>::vector(a), Wedge::vector(b), Wedge::vector(c));
        prop_assert_eq!(x.wedge(&y), y.wedge(&x).neg());
        prop_assert!(x.wedge(&x).is_zero());
        prop_assert_eq!(x.wedge(&y).wedge(&z), x.wedge(&y.wedge(&z)));
    }

    #[test]
    fn contraction_is_a_graded_derivation(lambda in partition(2, 4), j in 0i32..=6, k in 0i32..=6) {
        let u = Wedge::<Rational>::basis(&lambda, 2);
        let v = Wedge::vector(k);
        let lhs = v.wedge(&u).contract(j);
        let rhs = Wedge::vector(k).contract(j).wedge(&u).sub(&v.wedge(&u.contract(j)));
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn star_action_is_a_representation(
        r in 1usize..=3, i in 0u32..=4, j in 0u32..=4, k in 0u32..=4, l in 0u32..=4, w in 0u32..=4, pick in any::<prop::sample::Index>()
    ) {
        let ls = enumerate(r, w);
        let lambda = &ls[pick.index(ls.len())];
        prop_assert_eq!(bracket_check((i, j), (k, l), lambda, r), Ok(()));
    }

    #[test]
    fn fock_action_is_a_representation(
        i in -5i32..=5, j in -5i32..=5, k in -5i32..=5, l in -5i32..=5, lambda in partition(4, 4)
    ) {
        prop_assert_eq!(fock_bracket_check((i, j), (k, l), &lambda), Ok(()));
    }

    #[test]
    fn determinant_form_matches_oracle(r in 1usize..=3, i in 0u32..=5, j in 0u32..=5, w in 0u32..=5, pick in any::<prop::sample::Index>()) {
        let ls = enumerate(r, w);
        let lambda = &ls[pick.index(ls.len())];
        let s = gs_closed_form(lambda, r, i as i32).unwrap();
        prop_assert_eq!(gs_coeffs(&s, i, j, r).unwrap(), star_oracle_coeffs(i, j, lambda, r));
    }

    #[test]
    fn boson_fermion_round_trip(terms in prop::collection::btree_map(partition(3, 3), rational(), 0..=4)) {
        let u: FockElement = terms.into_iter().filter(|(_, q)| !q.is_zero()).collect();
        let f = fermion_boson(&u, 9).unwrap();
        prop_assert_eq!(boson_fermion(&f, 9).unwrap(), u);
    }

    #[test]
    fn exec_keeps_order(v in prop::collection::vec(any::<i64>(), 0..200), n in 1usize..=4) {
        let f = |x: &i64| x.wrapping_mul(3) ^ 5;
        let want: Vec<i64> = v.iter().map(f).collect();
        prop_assert_eq!(Exec::with_threads(n).map(&v, f), want.clone());
        prop_assert_eq!(Exec::sequential().map(&v, f), want);
    }
}
