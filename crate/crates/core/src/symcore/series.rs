use std::collections::BTreeMap;
use std::fmt;

use super::{Poly, Rat};
use crate::error::{Error, Result};

/// Element of `K[t]/(t^c)` whose coefficients are polynomials over the rationals.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct Series {
    modulus: u32,
    coeffs: BTreeMap<u32, Poly>,
}

impl Series {
    pub fn zero(modulus: u32) -> Self {
        Series {
            modulus,
            coeffs: BTreeMap::new(),
        }
    }

    pub fn one(modulus: u32) -> Self {
        Series::monomial(modulus, 0, Poly::one())
    }

    /// `coeff * t^exp`, or zero when `exp >= modulus`.
    pub fn monomial(modulus: u32, exp: u32, coeff: Poly) -> Self {
        let mut s = Series::zero(modulus);
        s.add_term(exp, &coeff);
        s
    }

    /// Series with rational coefficients.
    pub fn from_rats(modulus: u32, terms: impl IntoIterator<Item = (u32, Rat)>) -> Self {
        let mut s = Series::zero(modulus);
        for (e, c) in terms {
            s.add_term(e, &Poly::constant(c));
        }
        s
    }

    pub fn from_terms(modulus: u32, terms: impl IntoIterator<Item = (u32, Poly)>) -> Self {
        let mut s = Series::zero(modulus);
        for (e, c) in terms {
            s.add_term(e, &c);
        }
        s
    }

    pub fn modulus(&self) -> u32 {
        self.modulus
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Smallest exponent with a nonzero coefficient.
    pub fn order(&self) -> Option<u32> {
        self.coeffs.keys().next().copied()
    }

    pub fn coeff(&self, e: u32) -> Poly {
        self.coeffs.get(&e).cloned().unwrap_or_default()
    }

    pub fn coeff_ref(&self, e: u32) -> Option<&Poly> {
        self.coeffs.get(&e)
    }

    /// Nonzero terms in increasing exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (u32, &Poly)> {
        self.coeffs.iter().map(|(e, p)| (*e, p))
    }

    pub fn support(&self) -> Vec<u32> {
        self.coeffs.keys().copied().collect()
    }

    /// True when every coefficient is a rational constant.
    pub fn is_numeric(&self) -> bool {
        self.coeffs.values().all(Poly::is_constant)
    }

    pub fn add_term(&mut self, e: u32, c: &Poly) {
        if e >= self.modulus || c.is_zero() {
            return;
        }
        let slot = self.coeffs.entry(e).or_default();
        slot.add_assign(c);
        if slot.is_zero() {
            self.coeffs.remove(&e);
        }
    }

    fn check(&self, other: &Series) -> Result<()> {
        if self.modulus != other.modulus {
            return Err(Error::ModulusMismatch(self.modulus, other.modulus));
        }
        Ok(())
    }

    pub fn add(&self, other: &Series) -> Result<Series> {
        self.check(other)?;
        let mut out = self.clone();
        for (e, c) in &other.coeffs {
            out.add_term(*e, c);
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Series) -> Result<Series> {
        self.check(other)?;
        let mut out = self.clone();
        for (e, c) in &other.coeffs {
            out.add_term(*e, &c.neg());
        }
        Ok(out)
    }

    pub fn scale(&self, k: &Poly) -> Series {
        let mut out = Series::zero(self.modulus);
        if k.is_zero() {
            return out;
        }
        for (e, c) in &self.coeffs {
            out.add_term(*e, &c.mul(k));
        }
        out
    }

    pub fn scale_rat(&self, k: &Rat) -> Series {
        self.scale(&Poly::constant(k.clone()))
    }

    pub fn mul(&self, other: &Series) -> Result<Series> {
        self.check(other)?;
        Ok(self.mul_below(other, self.modulus))
    }

    /// Product keeping only exponents `< limit` (with `limit <= modulus`).
    pub(crate) fn mul_below(&self, other: &Series, limit: u32) -> Series {
        let limit = limit.min(self.modulus);
        let mut acc: BTreeMap<u32, Poly> = BTreeMap::new();
        for (ea, ca) in &self.coeffs {
            if *ea >= limit {
                break;
            }
            for (eb, cb) in &other.coeffs {
                let e = ea + eb;
                if e >= limit {
                    break;
                }
                acc.entry(e).or_default().add_product(ca, cb);
            }
        }
        acc.retain(|_, p| !p.is_zero());
        Series {
            modulus: self.modulus,
            coeffs: acc,
        }
    }

    /// This series with every exponent `>= limit` dropped.
    pub(crate) fn truncated(&self, limit: u32) -> Series {
        Series {
            modulus: self.modulus,
            coeffs: self
                .coeffs
                .range(..limit)
                .map(|(e, p)| (*e, p.clone()))
                .collect(),
        }
    }

    pub fn pow(&self, k: u32) -> Series {
        let mut acc = Series::one(self.modulus);
        for _ in 0..k {
            acc = acc.mul_below(self, self.modulus);
        }
        acc
    }

    /// Applies `f` to every coefficient, dropping any that become zero.
    pub fn map_coeffs(&self, mut f: impl FnMut(&Poly) -> Result<Poly>) -> Result<Series> {
        let mut out = Series::zero(self.modulus);
        for (e, c) in &self.coeffs {
            out.add_term(*e, &f(c)?);
        }
        Ok(out)
    }
}

impl fmt::Display for Series {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return f.write_str("0");
        }
        for (k, (e, c)) in self.coeffs.iter().enumerate() {
            let tp = match e {
                0 => String::new(),
                1 => "t".to_string(),
                _ => format!("t^{e}"),
            };
            let (neg, body) = match c.as_constant() {
                Some(r) => {
                    let a = r.abs();
                    let body = if *e == 0 {
                        a.to_string()
                    } else if a.is_one() {
                        tp
                    } else {
                        format!("{a}*{tp}")
                    };
                    (r.is_negative(), body)
                }
                None if *e == 0 => (false, format!("({c})")),
                None => (false, format!("({c})*{tp}")),
            };
            match (k, neg) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            f.write_str(&body)?;
        }
        Ok(())
    }
}

impl fmt::Debug for Series {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{self} mod t^{}]", self.modulus)
    }
}
