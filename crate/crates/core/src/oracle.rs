//! Brute-force verification through linear algebra.
//!
//! The subalgebra of `K[t]/(t^c)` generated by numeric series is spanned by
//! the products of generators of total order `< c` (everything else vanishes
//! mod `t^c`). Row-reducing that span gives its set of orders directly. This
//! path uses its own dense vectors and never touches the reduction code.

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::normalform::{CoefficientPoint, NormalFormTemplate};
use crate::semigroup::NumericalSemigroup;
use crate::symcore::{Rat, Series};

/// A subspace of `K[t]/(t^c)` in reduced row echelon form with respect to
/// `1, t, ..., t^{c-1}`, each row monic at its lowest exponent.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RowEchelonBasis {
    modulus: u32,
    /// Rows sorted by pivot; `rows[k][pivot_orders[k]] == 1`.
    rows: Vec<Vec<Rat>>,
    pivot_orders: Vec<u32>,
}

impl RowEchelonBasis {
    pub fn new(modulus: u32) -> Self {
        RowEchelonBasis {
            modulus,
            rows: Vec::new(),
            pivot_orders: Vec::new(),
        }
    }

    pub fn pivot_orders(&self) -> &[u32] {
        &self.pivot_orders
    }

    pub fn rows(&self) -> &[Vec<Rat>] {
        &self.rows
    }

    pub fn dimension(&self) -> usize {
        self.rows.len()
    }

    /// Adds `v` to the spanning set; returns whether the span grew.
    pub fn insert(&mut self, mut v: Vec<Rat>) -> bool {
        assert_eq!(v.len(), self.modulus as usize);
        for (row, &p) in self.rows.iter().zip(&self.pivot_orders) {
            let k = v[p as usize].clone();
            if !k.is_zero() {
                for (x, r) in v.iter_mut().zip(row).skip(p as usize) {
                    *x = &*x - &(&k * r);
                }
            }
        }
        let Some(q) = v.iter().position(|x| !x.is_zero()) else {
            return false;
        };
        let inv = v[q].recip().unwrap();
        for x in v.iter_mut().skip(q) {
            *x = &*x * &inv;
        }
        for row in self.rows.iter_mut() {
            let k = row[q].clone();
            if !k.is_zero() {
                for (x, r) in row.iter_mut().zip(&v).skip(q) {
                    *x = &*x - &(&k * r);
                }
            }
        }
        let at = self.pivot_orders.partition_point(|&p| p < q as u32);
        self.pivot_orders.insert(at, q as u32);
        self.rows.insert(at, v);
        true
    }

    pub fn row_at(&self, pivot: u32) -> Option<&[Rat]> {
        self.pivot_orders
            .binary_search(&pivot)
            .ok()
            .map(|k| self.rows[k].as_slice())
    }
}

fn dense(s: &Series) -> Result<Vec<Rat>> {
    let mut v = vec![Rat::zero(); s.modulus() as usize];
    for (e, c) in s.terms() {
        v[e as usize] = c
            .as_constant()
            .ok_or_else(|| Error::NonNumericSeries(c.to_string()))?;
    }
    Ok(v)
}

fn dense_mul(a: &[Rat], b: &[Rat]) -> Vec<Rat> {
    let n = a.len();
    let mut out = vec![Rat::zero(); n];
    for (i, x) in a.iter().enumerate().filter(|(_, x)| !x.is_zero()) {
        for (j, y) in b.iter().enumerate().take(n - i) {
            if !y.is_zero() {
                out[i + j] += &(x * y);
            }
        }
    }
    out
}

fn to_series(v: &[Rat]) -> Series {
    Series::from_rats(
        v.len() as u32,
        v.iter().enumerate().map(|(e, x)| (e as u32, x.clone())),
    )
}

/// Row-reduced span of the subalgebra generated by `generators` mod `t^modulus`.
pub fn subalgebra_span(generators: &[Series], modulus: u32) -> Result<RowEchelonBasis> {
    if generators.is_empty() {
        return Err(Error::NoGenerators);
    }
    let mut gens = Vec::new();
    for (i, g) in generators.iter().enumerate() {
        if g.modulus() != modulus {
            return Err(Error::ModulusMismatch(modulus, g.modulus()));
        }
        match g.order() {
            Some(0) => return Err(Error::OrderZeroGenerator(i)),
            Some(o) => gens.push((o, dense(g)?)),
            None => {}
        }
    }

    let mut basis = RowEchelonBasis::new(modulus);
    if modulus == 0 {
        return Ok(basis);
    }
    let mut one = vec![Rat::zero(); modulus as usize];
    one[0] = Rat::one();

    // Depth-first over exponent vectors with total order < modulus; the
    // generator index never decreases so each monomial is visited once.
    let mut stack = vec![(0usize, 0u32, one)];
    while let Some((from, order, v)) = stack.pop() {
        basis.insert(v.clone());
        for (j, (o, g)) in gens.iter().enumerate().skip(from) {
            if order + o < modulus {
                stack.push((j, order + o, dense_mul(&v, g)));
            }
        }
    }
    Ok(basis)
}

/// Orders of nonzero elements of the generated subalgebra below `modulus`,
/// excluding 0. The full semigroup is this set together with every `n >= modulus`.
pub fn subalgebra_closure_semigroup(generators: &[Series], modulus: u32) -> Result<BTreeSet<u32>> {
    let basis = subalgebra_span(generators, modulus)?;
    Ok(basis.pivot_orders().iter().copied().filter(|&p| p > 0).collect())
}

#[derive(Debug, Clone)]
pub struct CanonicalForm {
    pub semigroup: NumericalSemigroup,
    pub generators: Vec<Series>,
}

/// The unique normal-form generating set of the generated subalgebra, read off
/// the reduced row echelon basis at the minimal generators of its semigroup.
pub fn canonical_normal_form(generators: &[Series], modulus: u32) -> Result<CanonicalForm> {
    let basis = subalgebra_span(generators, modulus)?;
    let mut candidates: Vec<u32> = basis
        .pivot_orders()
        .iter()
        .copied()
        .filter(|&p| p > 0)
        .collect();
    let lowest = candidates.first().copied().unwrap_or(modulus.max(1));
    candidates.extend(modulus.max(1)..modulus.max(1) + lowest.max(1) + 1);
    let semigroup = NumericalSemigroup::from_generators(&candidates)?;
    let out = semigroup
        .generators()
        .iter()
        .map(|&v| match basis.row_at(v) {
            Some(row) if v < modulus => to_series(row),
            _ => Series::zero(modulus),
        })
        .collect();
    Ok(CanonicalForm {
        semigroup,
        generators: out,
    })
}

/// Whether the algebra at `point` has exactly the template's semigroup.
pub fn verify_point(template: &NormalFormTemplate, point: &CoefficientPoint) -> Result<bool> {
    let gens = template.instantiate(point)?;
    let semigroup = template.semigroup();
    if semigroup.conductor() == 0 {
        return Ok(true);
    }
    let found = subalgebra_closure_semigroup(&gens, template.modulus())?;
    let expected: BTreeSet<u32> = semigroup.elements_below_conductor().iter().copied().collect();
    Ok(found == expected)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn num(m: u32, terms: &[(u32, i64)]) -> Series {
        Series::from_rats(m, terms.iter().map(|&(e, c)| (e, Rat::integer(c))))
    }

    fn set(v: &[u32]) -> BTreeSet<u32> {
        v.iter().copied().collect()
    }

    #[test]
    fn closure_detects_extra_order() {
        let gens = [num(16, &[(4, 1)]), num(16, &[(6, 1), (7, 1)]), num(16, &[(13, 1)])];
        assert_eq!(
            subalgebra_closure_semigroup(&gens, 16).unwrap(),
            set(&[4, 6, 8, 10, 12, 13, 14, 15])
        );
    }

    #[test]
    fn closure_of_monomial_algebra() {
        let gens = [num(16, &[(4, 1)]), num(16, &[(6, 1)]), num(16, &[(13, 1)])];
        assert_eq!(
            subalgebra_closure_semigroup(&gens, 16).unwrap(),
            set(&[4, 6, 8, 10, 12, 13, 14])
        );
    }

    #[test]
    fn closure_two_five() {
        assert_eq!(
            subalgebra_closure_semigroup(&[num(4, &[(2, 1), (3, 1)])], 4).unwrap(),
            set(&[2])
        );
    }

    #[test]
    fn closure_errors() {
        assert_eq!(subalgebra_closure_semigroup(&[], 4), Err(Error::NoGenerators));
        assert_eq!(
            subalgebra_closure_semigroup(&[num(4, &[(0, 1), (2, 1)])], 4),
            Err(Error::OrderZeroGenerator(0))
        );
    }

    #[test]
    fn canonical_forms() {
        let cf = canonical_normal_form(&[num(8, &[(3, 1), (4, 1), (5, 1)]), num(8, &[(5, 1)])], 8).unwrap();
        assert_eq!(cf.semigroup.generators(), &[3, 5]);
        assert_eq!(cf.generators, vec![num(8, &[(3, 1), (4, 1)]), num(8, &[(5, 1)])]);

        let gens = vec![num(16, &[(4, 1)]), num(16, &[(6, 1)]), num(16, &[(13, 1)])];
        assert_eq!(canonical_normal_form(&gens, 16).unwrap().generators, gens);

        let cf = canonical_normal_form(&[num(4, &[(2, 1), (3, 1)])], 4).unwrap();
        assert_eq!(cf.semigroup.generators(), &[2, 5]);
        assert_eq!(cf.generators, vec![num(4, &[(2, 1), (3, 1)]), Series::zero(4)]);
    }

    #[test]
    fn verify_points() {
        let s = NumericalSemigroup::from_generators(&[4, 6, 13]).unwrap();
        let t = NormalFormTemplate::build(&s);
        assert!(verify_point(&t, &t.zero_point()).unwrap());
        let p = t.point_with_defaults([("b7", Rat::one())]).unwrap();
        assert!(!verify_point(&t, &p).unwrap());
        let p = t
            .point_with_defaults([("b7", Rat::one()), ("b9", Rat::new(1, 2))])
            .unwrap();
        assert!(verify_point(&t, &p).unwrap());
    }
}
