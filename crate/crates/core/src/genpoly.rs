//! Polynomials in the generator symbols `x_0, ..., x_g`, weighted by the
//! semigroup generators, with coefficients in [`Poly`].

use std::collections::BTreeMap;
use std::fmt;

use crate::symcore::{Poly, Rat};

#[derive(Clone, PartialEq, Eq, Default)]
pub struct GenPoly {
    arity: usize,
    terms: BTreeMap<Vec<u32>, Poly>,
}

impl GenPoly {
    pub fn zero(arity: usize) -> Self {
        GenPoly {
            arity,
            terms: BTreeMap::new(),
        }
    }

    pub fn monomial(exponents: Vec<u32>, coeff: Poly) -> Self {
        let mut p = GenPoly::zero(exponents.len());
        p.add_term(exponents, &coeff);
        p
    }

    /// `x^lhs - x^rhs`.
    pub fn binomial(lhs: &[u32], rhs: &[u32]) -> Self {
        let mut p = GenPoly::zero(lhs.len());
        p.add_term(lhs.to_vec(), &Poly::one());
        p.add_term(rhs.to_vec(), &Poly::constant(Rat::integer(-1)));
        p
    }

    /// Number of generator symbols.
    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, exponents: Vec<u32>, coeff: &Poly) {
        assert_eq!(exponents.len(), self.arity, "exponent vector length");
        if coeff.is_zero() {
            return;
        }
        let slot = self.terms.entry(exponents.clone()).or_default();
        slot.add_assign(coeff);
        if slot.is_zero() {
            self.terms.remove(&exponents);
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&[u32], &Poly)> {
        self.terms.iter().map(|(e, c)| (e.as_slice(), c))
    }

    pub fn scale(&self, k: &Rat) -> GenPoly {
        let mut out = GenPoly::zero(self.arity);
        for (e, c) in &self.terms {
            out.add_term(e.clone(), &c.scale(k));
        }
        out
    }

    pub fn add(&self, other: &GenPoly) -> GenPoly {
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c);
        }
        out
    }

    pub fn weighted_degree(exponents: &[u32], weights: &[u32]) -> u64 {
        exponents
            .iter()
            .zip(weights)
            .map(|(&e, &w)| e as u64 * w as u64)
            .sum()
    }

    /// Smallest weighted degree among the terms.
    pub fn weighted_order(&self, weights: &[u32]) -> Option<u64> {
        self.terms
            .keys()
            .map(|e| Self::weighted_degree(e, weights))
            .min()
    }

    /// The weighted-homogeneous part of lowest degree.
    pub fn lowest_part(&self, weights: &[u32]) -> GenPoly {
        let mut out = GenPoly::zero(self.arity);
        if let Some(d) = self.weighted_order(weights) {
            for (e, c) in &self.terms {
                if Self::weighted_degree(e, weights) == d {
                    out.add_term(e.clone(), c);
                }
            }
        }
        out
    }

    /// Value at `x_0 = ... = x_g = 1`.
    pub fn sum_of_coefficients(&self) -> Poly {
        let mut s = Poly::zero();
        for c in self.terms.values() {
            s.add_assign(c);
        }
        s
    }
}

pub fn symbol_name(i: usize, arity: usize) -> String {
    if arity <= 4 {
        ["x", "y", "z", "w"][i].to_string()
    } else {
        format!("x{i}")
    }
}

/// Renders `x^e` as e.g. `x^2*y`, or `1` for the empty product.
pub(crate) fn format_monomial(exponents: &[u32]) -> String {
    let parts: Vec<String> = exponents
        .iter()
        .enumerate()
        .filter(|(_, &e)| e > 0)
        .map(|(i, &e)| {
            let s = symbol_name(i, exponents.len());
            if e == 1 {
                s
            } else {
                format!("{s}^{e}")
            }
        })
        .collect();
    if parts.is_empty() {
        "1".into()
    } else {
        parts.join("*")
    }
}

impl fmt::Display for GenPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        // higher exponent vectors first, so x^3 precedes y^2 ... reversed lex
        for (k, (e, c)) in self.terms.iter().rev().enumerate() {
            let m = format_monomial(e);
            let (neg, coeff) = match c.as_constant() {
                Some(r) => (r.is_negative(), r.abs().to_string()),
                None => (false, format!("({c})")),
            };
            match (k, neg) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            if coeff == "1" {
                f.write_str(&m)?;
            } else if m == "1" {
                f.write_str(&coeff)?;
            } else {
                write!(f, "{coeff}*{m}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for GenPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
