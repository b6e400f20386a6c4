mod common;

use common::{random_point, random_series, semigroup_strategy, sg, small_rat};
use proptest::prelude::*;
use rand::rngs::StdRng;
use rand::SeedableRng;
use rgamma::deceptive::enumerate_sdec_below_conductor;
use rgamma::normalform::NormalFormTemplate;
use rgamma::reduction::{phi_eval, reduce, reduce_subset};
use rgamma::symcore::{Rat, Series};

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn numeric_reduction_invariants(s in semigroup_strategy(20, 40), seed in any::<u64>()) {
        let mut rng = StdRng::seed_from_u64(seed);
        let c = s.conductor();
        let t = NormalFormTemplate::build(&s);
        let gens = t.instantiate(&random_point(&t, &mut rng)).unwrap();
        let r = random_series(c, 1, &mut rng);
        let u = random_series(c, 1, &mut rng);

        let tr = reduce(&s, &gens, &r).unwrap();
        for e in tr.reduced.support() {
            prop_assert!(e == 0 || !s.contains(e));
        }
        prop_assert_eq!(tr.reduced.add(&phi_eval(&gens, &tr.witness).unwrap()).unwrap(), r.clone());
        prop_assert_eq!(reduce(&s, &gens, &tr.reduced).unwrap().reduced, tr.reduced.clone());

        let (alpha, beta) = (small_rat(&mut rng), small_rat(&mut rng));
        let combo = r.scale_rat(&alpha).add(&u.scale_rat(&beta)).unwrap();
        let lhs = reduce(&s, &gens, &combo).unwrap().reduced;
        let rhs = tr.reduced.scale_rat(&alpha)
            .add(&reduce(&s, &gens, &u).unwrap().reduced.scale_rat(&beta)).unwrap();
        prop_assert_eq!(lhs, rhs);

        if let Some(o) = r.order() {
            for step in &tr.steps {
                prop_assert_eq!(s.weighted_degree(&step.factorization), step.power as u64);
                prop_assert!(step.power >= o);
                if !s.contains(o) {
                    prop_assert!(step.power > o);
                }
            }
        }
    }

    #[test]
    fn subset_reduction_support(s in semigroup_strategy(20, 40), seed in any::<u64>()) {
        let mut rng = StdRng::seed_from_u64(seed);
        let c = s.conductor();
        let t = NormalFormTemplate::build(&s);
        let gens = t.instantiate(&random_point(&t, &mut rng)).unwrap();
        let r = random_series(c, 1, &mut rng);
        let subset = [0usize, 1];
        let tr = reduce_subset(&s, &subset, &gens, &r).unwrap();
        let sub = &s.generators()[..2];
        for e in tr.reduced.support().into_iter().filter(|&e| e > 0) {
            prop_assert!(common::fiber(sub, e as u64).is_empty());
        }
        for (exps, _) in tr.witness.terms() {
            prop_assert!(exps[2..].iter().all(|&x| x == 0));
        }
        prop_assert_eq!(tr.reduced.add(&phi_eval(&gens, &tr.witness).unwrap()).unwrap(), r);
    }

    #[test]
    fn binomial_images_reduce_above_their_degree(s in semigroup_strategy(15, 40)) {
        let t = NormalFormTemplate::build(&s);
        for b in enumerate_sdec_below_conductor(&s).iter().take(4) {
            let image = phi_eval(t.generators(), &b.to_genpoly()).unwrap();
            let tr = reduce(&s, t.generators(), &image).unwrap();
            prop_assert_eq!(tr.reduced.add(&phi_eval(t.generators(), &tr.witness).unwrap()).unwrap(), image);
            for step in &tr.steps {
                prop_assert!(step.power as u64 > b.degree);
            }
        }
    }
}

#[test]
fn symbolic_reconstruction_four_six_thirteen() {
    let s = sg(&[4, 6, 13]);
    let t = NormalFormTemplate::build(&s);
    let b = &enumerate_sdec_below_conductor(&s)[0];
    let image = phi_eval(t.generators(), &b.to_genpoly()).unwrap();
    let tr = reduce(&s, t.generators(), &image).unwrap();
    assert_eq!(tr.reduced.support(), vec![15]);
    assert_eq!(tr.reduced.add(&phi_eval(t.generators(), &tr.witness).unwrap()).unwrap(), image);
}

#[test]
fn subset_example_t8() {
    let s = sg(&[4, 6, 13]);
    let t = NormalFormTemplate::build(&s);
    let gens = t.instantiate(&t.zero_point()).unwrap();
    let input = Series::from_rats(16, [(8, Rat::one())]);
    let tr = reduce_subset(&s, &[0, 1], &gens, &input).unwrap();
    assert!(tr.reduced.is_zero());
    assert_eq!(tr.steps.len(), 1);
    assert_eq!(tr.steps[0].factorization, vec![2, 0, 0]);
}
