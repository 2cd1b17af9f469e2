use proptest::prelude::*;

use modp_core::charclass::{bso_presentation, dim_degree, kunneth, restriction_bso_to_bo2r, GradedPresentation, Generator};
use modp_core::exactalg::{CoeffRing, Poly, Ring};
use modp_core::groupdata::Series;
use modp_core::quillen::SWRing;

fn homogeneous(ring: &Ring, degree: u32, picks: &[Vec<usize>]) -> Poly {
    let mut out = Poly::zero(ring);
    for pick in picks {
        let mut exps = vec![0u32; ring.nvars()];
        let mut left = degree;
        for &v in pick.iter().cycle().take(4 * degree as usize + 4) {
            let w = ring.weight(v % ring.nvars());
            if w <= left {
                exps[v % ring.nvars()] += 1;
                left -= w;
            }
            if left == 0 {
                break;
            }
        }
        if left == 0 {
            out = &out + &Poly::monomial(ring, ring.monomial(&exps));
        }
    }
    out
}

fn picks() -> impl Strategy<Value = Vec<Vec<usize>>> {
    prop::collection::vec(prop::collection::vec(0usize..10, 1..6), 1..4)
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 64, ..ProptestConfig::default() })]

    #[test]
    fn cartan_formula(df in 1u32..7, dg in 1u32..7, pf in picks(), pg in picks(), i in 0u32..10) {
        let sw = SWRing::bo(8).unwrap();
        let f = homogeneous(sw.ring(), df, &pf);
        let g = homogeneous(sw.ring(), dg, &pg);
        let mut rhs = Poly::zero(sw.ring());
        for a in 0..=i {
            rhs = &rhs + &(&sw.sq(a, &f).unwrap() * &sw.sq(i - a, &g).unwrap());
        }
        prop_assert_eq!(sw.sq(i, &(&f * &g)).unwrap(), rhs);
    }

    #[test]
    fn unstable_axioms(d in 1u32..9, p in picks(), extra in 1u32..4) {
        let sw = SWRing::bso(9).unwrap();
        let f = homogeneous(sw.ring(), d, &p);
        prop_assert_eq!(sw.sq(d, &f).unwrap(), &f * &f);
        prop_assert!(sw.sq(d + extra, &f).unwrap().is_zero());
        for i in 0..=d {
            let s = sw.sq(i, &f).unwrap();
            prop_assert!(s.is_zero() || s.homogeneous_degree().unwrap() == Some(d + i));
        }
    }

    #[test]
    fn series_multiplicative(a in prop::collection::vec(1u32..5, 0..4), b in prop::collection::vec(1u32..5, 0..4)) {
        let pa = Series::polynomial_ring(&a);
        let pb = Series::polynomial_ring(&b);
        let mut ab = a.clone();
        ab.extend(&b);
        prop_assert_eq!(pa.mul(&pb).coefficients(20), Series::polynomial_ring(&ab).coefficients(20));
    }

    #[test]
    fn kunneth_dimensions(a in prop::collection::vec(1u32..4, 1..3), b in prop::collection::vec(1u32..4, 1..3), d in 0u32..9) {
        let mk = |tag: &str, ds: &[u32]| {
            let gens = ds.iter().enumerate().map(|(i, &d)| Generator::new(&format!("{tag}{i}"), d)).collect();
            GradedPresentation::new(tag, gens, CoeffRing::F2).unwrap()
        };
        let (pa, pb) = (mk("a", &a), mk("b", &b));
        let k = kunneth(&pa, &pb).unwrap();
        let want: usize = (0..=d).map(|e| dim_degree(&pa, e).unwrap() * dim_degree(&pb, d - e).unwrap()).sum();
        prop_assert_eq!(dim_degree(&k, d).unwrap(), want);
    }
}

#[test]
fn odd_restriction_kills_bso_relations_free() {
    let res = restriction_bso_to_bo2r(9).unwrap();
    assert!(res.radical_quotient);
    assert_eq!(res.source.generators().len(), bso_presentation(9).unwrap().generators().len());
}

#[test]
fn presentation_json_roundtrip() {
    let p = modp_core::charclass::bo_presentation(5).unwrap();
    let text = serde_json::to_string(&p.to_json()).unwrap();
    let back: modp_core::charclass::PresentationJson = serde_json::from_str(&text).unwrap();
    let q = GradedPresentation::from_json(&back, CoeffRing::F2, true).unwrap();
    assert_eq!(p, q);
    for d in 0..10 {
        assert_eq!(dim_degree(&p, d).unwrap(), dim_degree(&q, d).unwrap());
    }
}
