use std::collections::HashMap;

use proptest::prelude::*;
use rgamma::symcore::{Monomial, Poly, Rat, Series, Var};

const NAMES: [&str; 4] = ["a5", "a7", "b7", "c15"];

fn rat() -> impl Strategy<Value = Rat> {
    (-6i64..=6, 1i64..=4).prop_map(|(n, d)| Rat::new(n, d))
}

fn poly() -> impl Strategy<Value = Poly> {
    prop::collection::vec((prop::collection::vec(0u32..3, 4), rat()), 0..6).prop_map(|terms| {
        Poly::from_terms(terms.into_iter().map(|(exps, c)| {
            let m = Monomial::from_pairs(NAMES.iter().zip(exps).map(|(n, e)| (Var::new(*n), e)));
            (m, c)
        }))
    })
}

fn point() -> impl Strategy<Value = HashMap<Var, Rat>> {
    prop::collection::vec(rat(), 4).prop_map(|v| NAMES.iter().map(|n| Var::new(*n)).zip(v).collect())
}

fn numeric_series(c: u32) -> impl Strategy<Value = Series> {
    prop::collection::vec((0..c, rat()), 0..6).prop_map(move |t| Series::from_rats(c, t))
}

proptest! {
    #[test]
    fn ring_axioms(p in poly(), q in poly(), r in poly()) {
        prop_assert_eq!(p.mul(&q).mul(&r), p.mul(&q.mul(&r)));
        prop_assert_eq!(p.mul(&q.add(&r)), p.mul(&q).add(&p.mul(&r)));
        prop_assert_eq!(p.mul(&q), q.mul(&p));
        prop_assert_eq!(p.add(&q).add(&r), p.add(&q.add(&r)));
        prop_assert!(p.sub(&p).is_zero());
        prop_assert_eq!(p.mul(&Poly::one()), p.clone());
    }

    #[test]
    fn evaluation_is_a_ring_map(p in poly(), q in poly(), x in point()) {
        let (pv, qv) = (p.eval(&x).unwrap(), q.eval(&x).unwrap());
        prop_assert_eq!(p.mul(&q).eval(&x).unwrap(), &pv * &qv);
        prop_assert_eq!(p.add(&q).eval(&x).unwrap(), &pv + &qv);
    }

    #[test]
    fn display_parses_back(p in poly()) {
        let text = p.to_string();
        prop_assert_eq!(text.parse::<Poly>().unwrap(), p);
    }

    #[test]
    fn extract_linear_is_consistent(p in poly(), k in 0usize..4) {
        let v = Var::new(NAMES[k]);
        if let Some((alpha, h)) = p.extract_linear(&v) {
            prop_assert!(!alpha.is_zero());
            let rebuilt = Poly::var(v.clone()).scale(&alpha).add(&h);
            prop_assert!(p.sub(&rebuilt).is_zero());
        }
    }

    #[test]
    fn substitution_commutes_with_evaluation(p in poly(), q in poly(), x in point()) {
        let v = Var::new("a7");
        let mut y = x.clone();
        y.insert(v.clone(), q.eval(&x).unwrap());
        prop_assert_eq!(p.substitute(&v, &q).eval(&x).unwrap(), p.eval(&y).unwrap());
    }

    #[test]
    fn series_orders_add(s in numeric_series(30), u in numeric_series(30)) {
        let prod = s.mul(&u).unwrap();
        if let (Some(a), Some(b)) = (s.order(), u.order()) {
            if a + b < 30 {
                prop_assert_eq!(prod.order(), Some(a + b));
            } else {
                prop_assert!(prod.order().map_or(true, |o| o >= a + b));
            }
        }
        prop_assert_eq!(prod.clone(), u.mul(&s).unwrap());
    }

    #[test]
    fn series_pow_matches_repeated_mul(s in numeric_series(20), k in 0u32..5) {
        let mut acc = Series::one(20);
        for _ in 0..k {
            acc = acc.mul(&s).unwrap();
        }
        prop_assert_eq!(s.pow(k), acc);
    }
}
