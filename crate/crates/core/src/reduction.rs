//! The substitution map `x_i ↦ x_i(t)` and reduction of a series against the
//! generated algebra.
//!
//! Reduction walks the support of a series upward. Each exponent `n < c` that
//! lies in the (sub-)semigroup is cancelled by subtracting the matching
//! multiple of `f_n(t)`, the image of the revlex-smallest factorization of `n`.
//! What survives is supported on gaps only (exponent 0 is left alone).

use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::genpoly::GenPoly;
use crate::normalform::is_normal_form;
use crate::semigroup::NumericalSemigroup;
use crate::symcore::{Poly, Series};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReductionStep {
    pub power: u32,
    pub multiplier: Poly,
    pub factorization: Vec<u32>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReductionTrace {
    pub reduced: Series,
    pub steps: Vec<ReductionStep>,
    /// `F` with `input = reduced + φ(F)`.
    pub witness: GenPoly,
}

impl ReductionTrace {
    pub fn to_json(&self) -> TraceJson {
        TraceJson {
            reduced: self.reduced.to_string(),
            steps: self
                .steps
                .iter()
                .map(|s| StepJson {
                    power: s.power,
                    multiplier: s.multiplier.to_string(),
                    factorization: s.factorization.clone(),
                })
                .collect(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TraceJson {
    pub reduced: String,
    pub steps: Vec<StepJson>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct StepJson {
    pub power: u32,
    pub multiplier: String,
    pub factorization: Vec<u32>,
}

/// `Π x_j(t)^{e_j}` modulo `t^modulus`.
///
/// Each factor only contributes below `order + (modulus - total order)`, so
/// factors are truncated to that window before multiplying.
pub fn monomial_series(generators: &[Series], exponents: &[u32], modulus: u32) -> Series {
    let mut total = 0u64;
    for (g, &e) in generators.iter().zip(exponents) {
        if e == 0 {
            continue;
        }
        match g.order() {
            Some(o) => total += o as u64 * e as u64,
            None => return Series::zero(modulus),
        }
    }
    if total >= modulus as u64 {
        return Series::zero(modulus);
    }
    let window = modulus - total as u32;
    let mut acc = Series::one(modulus);
    let mut acc_order = 0u32;
    for (g, &e) in generators.iter().zip(exponents) {
        if e == 0 {
            continue;
        }
        let o = g.order().unwrap();
        let factor = g.truncated(o + window);
        for _ in 0..e {
            acc_order += o;
            acc = acc.mul_below(&factor, acc_order + window);
        }
    }
    acc
}

/// `φ(f)`: substitutes the generator series into `f` and expands mod `t^c`.
pub fn phi_eval(generators: &[Series], f: &GenPoly) -> Result<Series> {
    if generators.len() != f.arity() {
        return Err(Error::ArityMismatch {
            expected: generators.len(),
            got: f.arity(),
        });
    }
    let modulus = generators.first().ok_or(Error::NoGenerators)?.modulus();
    if let Some(g) = generators.iter().find(|g| g.modulus() != modulus) {
        return Err(Error::ModulusMismatch(modulus, g.modulus()));
    }
    let mut out = Series::zero(modulus);
    for (exps, coeff) in f.terms() {
        let m = monomial_series(generators, exps, modulus);
        for (e, c) in m.terms() {
            out.add_term(e, &c.mul(coeff));
        }
    }
    Ok(out)
}

/// Reduces series against a fixed set of normal-form generators, caching the
/// monomial series `f_n(t)` it builds along the way.
pub struct Reducer<'a> {
    semigroup: &'a NumericalSemigroup,
    generators: &'a [Series],
    subset: Vec<usize>,
    cache: HashMap<u32, (Vec<u32>, Series)>,
}

impl<'a> Reducer<'a> {
    /// Full reduction using every generator.
    pub fn new(semigroup: &'a NumericalSemigroup, generators: &'a [Series]) -> Result<Self> {
        let all: Vec<usize> = (0..semigroup.num_generators()).collect();
        Self::with_subset(semigroup, &all, generators)
    }

    /// Reduction that only removes powers in the semigroup generated by
    /// `v_j` for `j` in `subset`, using only those generators.
    pub fn with_subset(
        semigroup: &'a NumericalSemigroup,
        subset: &[usize],
        generators: &'a [Series],
    ) -> Result<Self> {
        if generators.len() != semigroup.num_generators() {
            return Err(Error::ArityMismatch {
                expected: semigroup.num_generators(),
                got: generators.len(),
            });
        }
        if !is_normal_form(generators, semigroup) {
            return Err(Error::NotNormalForm);
        }
        let mut subset: Vec<usize> = subset
            .iter()
            .copied()
            .filter(|&j| j < semigroup.num_generators())
            .collect();
        subset.sort_unstable();
        subset.dedup();
        Ok(Reducer {
            semigroup,
            generators,
            subset,
            cache: HashMap::new(),
        })
    }

    fn removal_series(&mut self, n: u32) -> Option<&(Vec<u32>, Series)> {
        if !self.cache.contains_key(&n) {
            let fact = self.semigroup.subset_factorization(&self.subset, n)?;
            let s = monomial_series(self.generators, &fact, self.semigroup.conductor());
            self.cache.insert(n, (fact, s));
        }
        self.cache.get(&n)
    }

    pub fn reduce(&mut self, input: &Series) -> Result<ReductionTrace> {
        let c = self.semigroup.conductor();
        if input.modulus() != c {
            return Err(Error::ModulusMismatch(c, input.modulus()));
        }
        let mut cur = input.clone();
        let mut steps = Vec::new();
        let mut witness = GenPoly::zero(self.semigroup.num_generators());
        let mut last = 0u32;
        loop {
            let next = cur
                .terms()
                .map(|(e, _)| e)
                .find(|&e| e > last && self.semigroup.contains(e) && e < c);
            let Some(n) = next else { break };
            last = n;
            let Some((fact, f)) = self.removal_series(n).cloned() else {
                continue;
            };
            let q = cur.coeff(n);
            cur = cur.sub(&f.scale(&q))?;
            witness.add_term(fact.clone(), &q);
            steps.push(ReductionStep {
                power: n,
                multiplier: q,
                factorization: fact,
            });
        }
        Ok(ReductionTrace {
            reduced: cur,
            steps,
            witness,
        })
    }
}

/// Full reduction of `input` with respect to the algebra generated by `generators`.
pub fn reduce(
    semigroup: &NumericalSemigroup,
    generators: &[Series],
    input: &Series,
) -> Result<ReductionTrace> {
    Reducer::new(semigroup, generators)?.reduce(input)
}

/// Reduction restricted to the generators indexed by `subset`.
pub fn reduce_subset(
    semigroup: &NumericalSemigroup,
    subset: &[usize],
    generators: &[Series],
    input: &Series,
) -> Result<ReductionTrace> {
    Reducer::with_subset(semigroup, subset, generators)?.reduce(input)
}
