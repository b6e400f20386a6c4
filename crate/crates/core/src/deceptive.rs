//! Deceptive binomials: pairs of generator monomials with equal weighted degree.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::genpoly::{format_monomial, GenPoly};
use crate::semigroup::{revlex_min_solution, NumericalSemigroup};

/// Exponent vector `(i_0, ..., i_g)` together with its weighted degree.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct GenMonomial {
    pub exponents: Vec<u32>,
    pub weighted_degree: u64,
}

impl GenMonomial {
    pub fn new(exponents: Vec<u32>, semigroup: &NumericalSemigroup) -> Self {
        let weighted_degree = semigroup.weighted_degree(&exponents);
        GenMonomial {
            exponents,
            weighted_degree,
        }
    }
}

/// `x^lhs - x^rhs` with both sides of the same weighted degree.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct DeceptiveBinomial {
    pub degree: u64,
    pub lhs: GenMonomial,
    pub rhs: GenMonomial,
}

impl DeceptiveBinomial {
    /// Orients the pair so that, at the first index where they differ, the
    /// left side has the smaller exponent. `None` if `u == w` or degrees differ.
    pub fn oriented(u: GenMonomial, w: GenMonomial) -> Option<Self> {
        if u.weighted_degree != w.weighted_degree || u.exponents == w.exponents {
            return None;
        }
        let degree = u.weighted_degree;
        let (lhs, rhs) = if u.exponents < w.exponents { (u, w) } else { (w, u) };
        Some(DeceptiveBinomial { degree, lhs, rhs })
    }

    pub fn to_genpoly(&self) -> GenPoly {
        GenPoly::binomial(&self.lhs.exponents, &self.rhs.exponents)
    }

    /// The same binomial with its sides swapped (the negated polynomial).
    pub fn reversed(&self) -> DeceptiveBinomial {
        DeceptiveBinomial {
            degree: self.degree,
            lhs: self.rhs.clone(),
            rhs: self.lhs.clone(),
        }
    }

    pub fn to_json(&self) -> BinomialJson {
        BinomialJson {
            lhs: self.lhs.exponents.clone(),
            rhs: self.rhs.exponents.clone(),
            degree: self.degree,
        }
    }
}

impl fmt::Display for DeceptiveBinomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} - {}",
            format_monomial(&self.lhs.exponents),
            format_monomial(&self.rhs.exponents)
        )
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BinomialJson {
    pub lhs: Vec<u32>,
    pub rhs: Vec<u32>,
    pub degree: u64,
}

/// All exponent vectors with weighted degree `< bound`, bucketed by degree.
fn monomials_below(weights: &[u32], bound: u64) -> BTreeMap<u64, Vec<Vec<u32>>> {
    fn rec(
        weights: &[u32],
        bound: u64,
        idx: usize,
        cur: &mut Vec<u32>,
        deg: u64,
        out: &mut BTreeMap<u64, Vec<Vec<u32>>>,
    ) {
        if idx == weights.len() {
            out.entry(deg).or_default().push(cur.clone());
            return;
        }
        let w = weights[idx] as u64;
        let mut e = 0u32;
        loop {
            let d = deg + e as u64 * w;
            if d >= bound {
                break;
            }
            cur.push(e);
            rec(weights, bound, idx + 1, cur, d, out);
            cur.pop();
            e += 1;
        }
    }
    let mut out = BTreeMap::new();
    if bound > 0 {
        rec(weights, bound, 0, &mut Vec::new(), 0, &mut out);
    }
    out
}

/// Every oriented deceptive binomial of weighted degree below the conductor,
/// sorted by degree, then left side, then right side.
pub fn enumerate_sdec_below_conductor(semigroup: &NumericalSemigroup) -> Vec<DeceptiveBinomial> {
    let buckets = monomials_below(semigroup.generators(), semigroup.conductor() as u64);
    let mut out = Vec::new();
    for (deg, mut mons) in buckets {
        mons.sort();
        for i in 0..mons.len() {
            for j in i + 1..mons.len() {
                out.push(DeceptiveBinomial {
                    degree: deg,
                    lhs: GenMonomial {
                        exponents: mons[i].clone(),
                        weighted_degree: deg,
                    },
                    rhs: GenMonomial {
                        exponents: mons[j].clone(),
                        weighted_degree: deg,
                    },
                });
            }
        }
    }
    out.sort();
    out
}

/// Whether the lowest weighted-homogeneous part of `f` vanishes at all-ones.
pub fn is_deceptive(f: &GenPoly, semigroup: &NumericalSemigroup) -> Result<bool> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if f.arity() != semigroup.num_generators() {
        return Err(Error::ArityMismatch {
            expected: semigroup.num_generators(),
            got: f.arity(),
        });
    }
    Ok(f.lowest_part(semigroup.generators()).sum_of_coefficients().is_zero())
}

/// The three binomials generating the deceptive ideal of a three-generator semigroup.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ThreeGenIdecGenerators {
    pub k0: u32,
    pub k1: u32,
    pub k2: u32,
    /// `k0 v_0 = m0 v_1 + m1 v_2`
    pub m: (u32, u32),
    /// `k1 v_1 = n0 v_0 + n1 v_2`
    pub n: (u32, u32),
    /// `k2 v_2 = p0 v_0 + p1 v_1`
    pub p: (u32, u32),
    /// Pure power on the left, cofactor monomial on the right; degrees may exceed `c`.
    pub f1: DeceptiveBinomial,
    pub f2: DeceptiveBinomial,
    pub f3: DeceptiveBinomial,
}

/// For each generator, the least `k` such that `k v_j` is a sum of the other two
/// generators. Among cofactor solutions the last coordinate is minimized first.
pub fn idec_generators_3gen(semigroup: &NumericalSemigroup) -> Result<ThreeGenIdecGenerators> {
    if semigroup.num_generators() != 3 {
        return Err(Error::WrongGeneratorCount(semigroup.num_generators()));
    }
    let v = semigroup.generators();
    let relation = |j: usize| -> (u32, Vec<u32>) {
        let others: Vec<usize> = (0..3).filter(|&i| i != j).collect();
        let mut k = 1u32;
        loop {
            if let Some(sol) = revlex_min_solution(v, &others, k * v[j]) {
                return (k, sol);
            }
            k += 1;
        }
    };
    let build = |j: usize, k: u32, rhs: Vec<u32>| {
        let mut lhs = vec![0u32; 3];
        lhs[j] = k;
        let degree = k as u64 * v[j] as u64;
        DeceptiveBinomial {
            degree,
            lhs: GenMonomial {
                exponents: lhs,
                weighted_degree: degree,
            },
            rhs: GenMonomial {
                exponents: rhs,
                weighted_degree: degree,
            },
        }
    };
    let (k0, s0) = relation(0);
    let (k1, s1) = relation(1);
    let (k2, s2) = relation(2);
    Ok(ThreeGenIdecGenerators {
        k0,
        k1,
        k2,
        m: (s0[1], s0[2]),
        n: (s1[0], s1[2]),
        p: (s2[0], s2[1]),
        f1: build(0, k0, s0),
        f2: build(1, k1, s1),
        f3: build(2, k2, s2),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::symcore::{Poly, Rat};

    fn sg(g: &[u32]) -> NumericalSemigroup {
        NumericalSemigroup::from_generators(g).unwrap()
    }

    fn pairs(s: &[DeceptiveBinomial]) -> Vec<(Vec<u32>, Vec<u32>, u64)> {
        s.iter()
            .map(|b| (b.lhs.exponents.clone(), b.rhs.exponents.clone(), b.degree))
            .collect()
    }

    #[test]
    fn sdec_four_six_thirteen() {
        let s = enumerate_sdec_below_conductor(&sg(&[4, 6, 13]));
        assert_eq!(pairs(&s), vec![(vec![0, 2, 0], vec![3, 0, 0], 12)]);
        assert_eq!(s[0].to_string(), "y^2 - x^3");
    }

    #[test]
    fn sdec_nine_sixteen_nineteen() {
        let s = enumerate_sdec_below_conductor(&sg(&[9, 16, 19]));
        assert_eq!(
            pairs(&s),
            vec![
                (vec![0, 1, 2], vec![6, 0, 0], 54),
                (vec![0, 0, 3], vec![1, 3, 0], 57),
            ]
        );
    }

    #[test]
    fn sdec_eight_to_eleven() {
        let s = enumerate_sdec_below_conductor(&sg(&[8, 9, 10, 11]));
        let shown: Vec<String> = s.iter().map(|b| b.to_string()).collect();
        assert_eq!(shown, ["y^2 - x*z", "y*z - x*w", "z^2 - y*w"]);
    }

    #[test]
    fn sdec_two_generators_empty() {
        assert!(enumerate_sdec_below_conductor(&sg(&[3, 5])).is_empty());
    }

    #[test]
    fn deceptive_test() {
        let s = sg(&[4, 6, 13]);
        assert!(is_deceptive(&GenPoly::binomial(&[0, 2, 0], &[3, 0, 0]), &s).unwrap());
        let x0 = GenPoly::monomial(vec![1, 0, 0], Poly::one());
        assert!(!is_deceptive(&x0, &s).unwrap());
        let mut f = GenPoly::zero(3);
        f.add_term(vec![0, 2, 0], &Poly::constant(Rat::integer(2)));
        f.add_term(vec![3, 0, 0], &Poly::constant(Rat::integer(-1)));
        f.add_term(vec![4, 0, 0], &Poly::one());
        assert!(!is_deceptive(&f, &s).unwrap());
        assert_eq!(is_deceptive(&GenPoly::zero(3), &s), Err(Error::ZeroPolynomial));
    }

    #[test]
    fn three_gen_generators() {
        let r = idec_generators_3gen(&sg(&[9, 16, 19])).unwrap();
        assert_eq!((r.k0, r.m), (6, (1, 2)));
        assert_eq!((r.k1, r.n), (4, (5, 1)));
        assert_eq!((r.k2, r.p), (3, (1, 3)));
        assert_eq!(r.f2.degree, 64);

        let r = idec_generators_3gen(&sg(&[4, 6, 13])).unwrap();
        assert_eq!((r.k0, r.m), (3, (2, 0)));
        assert_eq!((r.k1, r.n), (2, (3, 0)));
        assert_eq!((r.k2, r.p), (2, (5, 1)));

        assert_eq!(
            idec_generators_3gen(&sg(&[8, 9, 10, 11])),
            Err(Error::WrongGeneratorCount(4))
        );
    }
}
