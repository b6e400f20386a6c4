//! Numerical semigroups: minimal generators, conductor, gaps and factorizations.

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A numerical semigroup `Γ ⊆ ℕ` given by its minimal generators.
///
/// Everything is precomputed at construction; the value is immutable afterwards.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NumericalSemigroup {
    generators: Vec<u32>,
    conductor: u32,
    gaps: Vec<u32>,
    elements_below_c: Vec<u32>,
    /// `member[n]` for `0 <= n < conductor`.
    member: Vec<bool>,
}

/// Outcome of the plane-curve semigroup criterion.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PlaneCriterionReport {
    /// `e_i = gcd(v_0, ..., v_i)`, with `e_0 = v_0`.
    pub e_sequence: Vec<u32>,
    pub condition_i_holds: bool,
    /// Indices `i >= 2` with `v_i <= lcm(e_{i-2}, v_{i-1})`.
    pub condition_ii_failures: Vec<usize>,
    pub is_plane: bool,
}

impl NumericalSemigroup {
    /// Builds the semigroup generated by `raw`, dropping redundant generators.
    pub fn from_generators(raw: &[u32]) -> Result<Self> {
        if raw.is_empty() {
            return Err(Error::EmptyInput);
        }
        if raw.contains(&0) {
            return Err(Error::ZeroGenerator);
        }
        let mut sorted = raw.to_vec();
        sorted.sort_unstable();
        sorted.dedup();
        let g = sorted.iter().fold(0u32, |acc, &v| acc.gcd(&v));
        if g != 1 {
            return Err(Error::NonCoprimeGenerators(sorted, g));
        }

        // Minimal generators: keep v only if it is not reachable from the smaller kept ones.
        let max = *sorted.last().unwrap() as usize;
        let mut reach = vec![false; max + 1];
        reach[0] = true;
        let mut generators = Vec::new();
        for &v in &sorted {
            if reach[v as usize] {
                continue;
            }
            generators.push(v);
            let v = v as usize;
            for m in v..=max {
                if reach[m - v] {
                    reach[m] = true;
                }
            }
        }

        // The Frobenius number of a coprime set is below v_0 * v_g.
        let bound = (generators[0] as usize) * (*generators.last().unwrap() as usize) + 1;
        let mut sieve = vec![false; bound + 1];
        sieve[0] = true;
        for n in 1..=bound {
            sieve[n] = generators
                .iter()
                .any(|&v| (v as usize) <= n && sieve[n - v as usize]);
        }
        let conductor = sieve
            .iter()
            .rposition(|&m| !m)
            .map_or(0, |frobenius| frobenius + 1) as u32;
        let member = sieve[..conductor as usize].to_vec();
        let gaps = (1..conductor).filter(|&n| !member[n as usize]).collect();
        let elements_below_c = (1..conductor).filter(|&n| member[n as usize]).collect();

        Ok(Self {
            generators,
            conductor,
            gaps,
            elements_below_c,
            member,
        })
    }

    /// Minimal generators `v_0 < ... < v_g`.
    pub fn generators(&self) -> &[u32] {
        &self.generators
    }

    /// Number of minimal generators, `g + 1`.
    pub fn num_generators(&self) -> usize {
        self.generators.len()
    }

    pub fn conductor(&self) -> u32 {
        self.conductor
    }

    pub fn gaps(&self) -> &[u32] {
        &self.gaps
    }

    /// Nonzero elements below the conductor, `n_1 < ... < n_k`.
    pub fn elements_below_conductor(&self) -> &[u32] {
        &self.elements_below_c
    }

    pub fn contains(&self, n: u32) -> bool {
        n >= self.conductor || self.member[n as usize]
    }

    pub fn is_gap(&self, n: u32) -> bool {
        !self.contains(n)
    }

    /// Number of gaps strictly greater than `x`.
    pub fn gaps_above(&self, x: u32) -> usize {
        self.gaps.len() - self.gaps.partition_point(|&d| d <= x)
    }

    /// `M(Γ)`: the sum over all minimal generators of the number of gaps above it.
    pub fn ambient_dimension(&self) -> usize {
        self.generators.iter().map(|&v| self.gaps_above(v)).sum()
    }

    /// Weighted degree `Σ e_j v_j` of an exponent vector.
    pub fn weighted_degree(&self, exponents: &[u32]) -> u64 {
        exponents
            .iter()
            .zip(&self.generators)
            .map(|(&e, &v)| e as u64 * v as u64)
            .sum()
    }

    /// The factorization of `n` (with `0 < n < c`) that is smallest when
    /// compared at the largest index of disagreement.
    pub fn revlex_min_factorization(&self, n: u32) -> Result<Vec<u32>> {
        if n == 0 || n >= self.conductor || !self.contains(n) {
            return Err(Error::NotRepresentable(n));
        }
        let all: Vec<usize> = (0..self.generators.len()).collect();
        revlex_min_solution(&self.generators, &all, n).ok_or(Error::NotRepresentable(n))
    }

    /// Like [`Self::revlex_min_factorization`] but only using the generators at
    /// `subset`; `None` when `n` is outside the sub-semigroup they generate.
    pub fn subset_factorization(&self, subset: &[usize], n: u32) -> Option<Vec<u32>> {
        revlex_min_solution(&self.generators, subset, n)
    }

    /// Teissier's criterion for the semigroup of a plane branch.
    pub fn is_plane_semigroup(&self) -> PlaneCriterionReport {
        let v = &self.generators;
        let mut e_sequence = Vec::with_capacity(v.len());
        let mut acc = 0u32;
        for &vi in v {
            acc = acc.gcd(&vi);
            e_sequence.push(acc);
        }
        let condition_i_holds =
            e_sequence.windows(2).all(|w| w[0] > w[1]) && *e_sequence.last().unwrap() == 1;
        let condition_ii_failures = (2..v.len())
            .filter(|&i| v[i] as u64 <= (e_sequence[i - 2] as u64).lcm(&(v[i - 1] as u64)))
            .collect::<Vec<_>>();
        let is_plane = condition_i_holds && condition_ii_failures.is_empty();
        PlaneCriterionReport {
            e_sequence,
            condition_i_holds,
            condition_ii_failures,
            is_plane,
        }
    }
}

/// Revlex-smallest `(i_0, ..., i_g)` with `Σ i_j w_j = n`, restricted to the
/// indices in `allowed` (all other entries stay 0).
///
/// Minimizes the entry at the highest allowed index first, then the next one down.
pub(crate) fn revlex_min_solution(weights: &[u32], allowed: &[usize], n: u32) -> Option<Vec<u32>> {
    let mut idx: Vec<usize> = allowed.iter().copied().filter(|&j| j < weights.len()).collect();
    idx.sort_unstable();
    idx.dedup();
    let n = n as usize;
    // prefix[k][m]: m is a sum of weights idx[0..k].
    let mut prefix = vec![vec![false; n + 1]];
    prefix[0][0] = true;
    for (k, &j) in idx.iter().enumerate() {
        let w = weights[j] as usize;
        let mut row = prefix[k].clone();
        for m in w..=n {
            if row[m - w] {
                row[m] = true;
            }
        }
        prefix.push(row);
    }
    if !prefix[idx.len()][n] {
        return None;
    }
    let mut out = vec![0u32; weights.len()];
    let mut rem = n;
    for k in (0..idx.len()).rev() {
        let w = weights[idx[k]] as usize;
        let mut count = 0;
        while !prefix[k][rem] {
            rem -= w;
            count += 1;
        }
        out[idx[k]] = count;
    }
    debug_assert_eq!(rem, 0);
    Some(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sg(g: &[u32]) -> NumericalSemigroup {
        NumericalSemigroup::from_generators(g).unwrap()
    }

    #[test]
    fn drops_redundant_generators() {
        assert_eq!(sg(&[4, 6, 13, 17]).generators(), &[4, 6, 13]);
        assert_eq!(sg(&[6, 4, 4, 13]).generators(), &[4, 6, 13]);
    }

    #[test]
    fn two_five() {
        let s = sg(&[2, 5]);
        assert_eq!(s.generators(), &[2, 5]);
        assert_eq!(s.conductor(), 4);
        assert_eq!(s.gaps(), &[1, 3]);
        assert_eq!(s.elements_below_conductor(), &[2]);
    }

    #[test]
    fn naturals() {
        let s = sg(&[1]);
        assert_eq!(s.conductor(), 0);
        assert!(s.gaps().is_empty());
        assert!(s.contains(0) && s.contains(7));
        assert_eq!(s.ambient_dimension(), 0);
    }

    #[test]
    fn nine_sixteen_nineteen() {
        let s = sg(&[9, 16, 19]);
        assert_eq!(s.conductor(), 59);
        let expected = [
            1, 2, 3, 4, 5, 6, 7, 8, 10, 11, 12, 13, 14, 15, 17, 20, 21, 22, 23, 24, 26, 29, 30,
            31, 33, 39, 40, 42, 49, 58,
        ];
        assert_eq!(s.gaps(), &expected);
        assert_eq!(s.ambient_dimension(), 53);
    }

    #[test]
    fn errors() {
        assert_eq!(NumericalSemigroup::from_generators(&[]), Err(Error::EmptyInput));
        assert!(matches!(
            NumericalSemigroup::from_generators(&[4, 6]),
            Err(Error::NonCoprimeGenerators(_, 2))
        ));
        assert_eq!(NumericalSemigroup::from_generators(&[0, 3]), Err(Error::ZeroGenerator));
    }

    #[test]
    fn membership() {
        let s = sg(&[4, 6, 13]);
        assert!(!s.contains(15));
        assert!(s.contains(0));
        assert!(s.contains(16) && s.contains(1000));
        assert!(!sg(&[8, 9, 10, 11]).contains(23));
    }

    #[test]
    fn ambient_dimensions() {
        assert_eq!(sg(&[4, 6, 13]).ambient_dimension(), 10);
        assert_eq!(sg(&[8, 9, 10, 11]).ambient_dimension(), 20);
        assert_eq!(sg(&[3, 5]).ambient_dimension(), 3);
    }

    #[test]
    fn factorizations() {
        let s = sg(&[4, 6, 13]);
        assert_eq!(s.revlex_min_factorization(13).unwrap(), vec![0, 0, 1]);
        assert_eq!(s.revlex_min_factorization(14).unwrap(), vec![2, 1, 0]);
        assert_eq!(s.revlex_min_factorization(12).unwrap(), vec![3, 0, 0]);
        assert_eq!(s.revlex_min_factorization(15), Err(Error::NotRepresentable(15)));
        assert_eq!(s.revlex_min_factorization(16), Err(Error::NotRepresentable(16)));
        assert_eq!(s.subset_factorization(&[0, 1], 13), None);
        assert_eq!(s.subset_factorization(&[0, 1], 8), Some(vec![2, 0, 0]));
    }

    #[test]
    fn plane_criterion() {
        let r = sg(&[4, 6, 11]).is_plane_semigroup();
        assert!(!r.is_plane);
        assert!(r.condition_i_holds);
        assert_eq!(r.condition_ii_failures, vec![2]);
        let r = sg(&[4, 6, 13]).is_plane_semigroup();
        assert_eq!(r.e_sequence, vec![4, 2, 1]);
        assert!(r.is_plane);
        assert!(sg(&[3, 7]).is_plane_semigroup().is_plane);
        assert!(!sg(&[8, 9, 10, 11]).is_plane_semigroup().condition_i_holds);
    }
}
