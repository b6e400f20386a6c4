#![allow(dead_code)]

use std::collections::{BTreeSet, HashMap, VecDeque};

use num_integer::Integer;
use proptest::prelude::*;
use rand::rngs::StdRng;
use rand::Rng;

use rgamma::normalform::{CoefficientPoint, NormalFormTemplate};
use rgamma::symcore::{Rat, Series};
use rgamma::variety::EliminationResult;
use rgamma::NumericalSemigroup;

pub fn sg(g: &[u32]) -> NumericalSemigroup {
    NumericalSemigroup::from_generators(g).unwrap()
}

pub fn small_rat(rng: &mut StdRng) -> Rat {
    Rat::new(rng.gen_range(-4..=4), rng.gen_range(1..=3))
}

pub fn nonzero_rat(rng: &mut StdRng) -> Rat {
    loop {
        let r = small_rat(rng);
        if !r.is_zero() {
            return r;
        }
    }
}

/// Random semigroup with 2 to 4 requested generators and `0 < c <= max_c`.
pub fn random_semigroup(rng: &mut StdRng, max_c: u32) -> NumericalSemigroup {
    loop {
        let k = rng.gen_range(2..=4);
        let v0 = rng.gen_range(2..=9u32);
        let mut g = vec![v0];
        for _ in 1..k {
            g.push(rng.gen_range(v0 + 1..=v0 + 2 * max_c / 3));
        }
        if g.iter().fold(0, |a, &b| a.gcd(&b)) != 1 {
            continue;
        }
        let s = sg(&g);
        if s.conductor() > 0 && s.conductor() <= max_c {
            return s;
        }
    }
}

pub fn random_free(template: &NormalFormTemplate, rng: &mut StdRng) -> HashMap<rgamma::symcore::Var, Rat> {
    template
        .variables()
        .into_iter()
        .map(|v| (v, small_rat(rng)))
        .collect()
}

pub fn random_point(template: &NormalFormTemplate, rng: &mut StdRng) -> CoefficientPoint {
    template.point_from_map(random_free(template, rng)).unwrap()
}

/// A point with eliminated coordinates solved from random free ones.
pub fn point_on(template: &NormalFormTemplate, elim: &EliminationResult, rng: &mut StdRng) -> CoefficientPoint {
    elim.complete_point(template, &random_free(template, rng)).unwrap()
}

/// `point_on`, with one solved coordinate shifted by a nonzero amount.
pub fn point_off(template: &NormalFormTemplate, elim: &EliminationResult, rng: &mut StdRng) -> CoefficientPoint {
    let p = point_on(template, elim, rng);
    let mut map = p.assignment().clone();
    if !elim.solved.is_empty() {
        let k = rng.gen_range(0..elim.solved.len());
        let v = &elim.solved[k].0;
        let shifted = &map[v] + &nonzero_rat(rng);
        map.insert(v.clone(), shifted);
    }
    template.point_from_map(map).unwrap()
}

/// Numeric series mod `t^c` with random support in `[lo, c)`.
pub fn random_series(c: u32, lo: u32, rng: &mut StdRng) -> Series {
    let mut terms = Vec::new();
    for e in lo..c {
        if rng.gen_bool(0.5) {
            terms.push((e, small_rat(rng)));
        }
    }
    Series::from_rats(c, terms)
}

pub fn semigroup_strategy(max_gen: u32, max_c: u32) -> impl Strategy<Value = NumericalSemigroup> {
    prop::collection::vec(2..=max_gen, 2..=4).prop_filter_map("coprime with small conductor", move |g| {
        if g.iter().fold(0, |a, &b| a.gcd(&b)) != 1 {
            return None;
        }
        let s = sg(&g);
        (s.conductor() <= max_c).then_some(s)
    })
}

/// Every exponent vector of weighted degree exactly `d`.
pub fn fiber(weights: &[u32], d: u64) -> Vec<Vec<u32>> {
    fn rec(w: &[u32], left: u64, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        match w {
            [] => {
                if left == 0 {
                    out.push(cur.clone());
                }
            }
            [first, rest @ ..] => {
                let mut e = 0u32;
                while e as u64 * *first as u64 <= left {
                    cur.push(e);
                    rec(rest, left - e as u64 * *first as u64, cur, out);
                    cur.pop();
                    e += 1;
                }
            }
        }
    }
    let mut out = Vec::new();
    rec(weights, d, &mut Vec::new(), &mut out);
    out
}

/// Whether `u` and `w` are joined by moves `a <-> b` (times any monomial)
/// taken from `moves`; this is membership of `x^u - x^w` in the binomial
/// ideal generated by `x^a - x^b`.
pub fn connected_by_moves(u: &[u32], w: &[u32], moves: &[(Vec<u32>, Vec<u32>)]) -> bool {
    let mut seen: BTreeSet<Vec<u32>> = BTreeSet::new();
    let mut queue = VecDeque::from([u.to_vec()]);
    seen.insert(u.to_vec());
    while let Some(x) = queue.pop_front() {
        if x == w {
            return true;
        }
        for (a, b) in moves {
            for (from, to) in [(a, b), (b, a)] {
                if x.iter().zip(from).all(|(xi, fi)| xi >= fi) {
                    let y: Vec<u32> = x.iter().zip(from).zip(to).map(|((xi, fi), ti)| xi - fi + ti).collect();
                    if seen.insert(y.clone()) {
                        queue.push_back(y);
                    }
                }
            }
        }
    }
    false
}

/// All pairs of distinct exponent vectors of equal degree `< c`, found by
/// testing every pair in the box `e_i <= c / v_i`.
pub fn brute_force_sdec(s: &NumericalSemigroup) -> BTreeSet<(Vec<u32>, Vec<u32>)> {
    let v = s.generators();
    let c = s.conductor() as u64;
    let mut all = vec![vec![]];
    for &vi in v {
        let mut next = Vec::new();
        for p in &all {
            for e in 0..=(c / vi as u64) as u32 {
                let mut q: Vec<u32> = p.clone();
                q.push(e);
                next.push(q);
            }
        }
        all = next;
    }
    let deg = |e: &[u32]| e.iter().zip(v).map(|(&a, &b)| a as u64 * b as u64).sum::<u64>();
    let mut out = BTreeSet::new();
    for a in &all {
        for b in &all {
            if a < b && deg(a) == deg(b) && deg(a) < c {
                out.insert((a.clone(), b.clone()));
            }
        }
    }
    out
}
