//! Symbolic normal-form generators and the coordinates of the ambient affine space.
//!
//! Generator `i` is `t^{v_i} + Σ var(i, δ) t^δ` over the gaps `δ > v_i`, read
//! modulo `t^c`. Variables are named `a5, b7, c15, ...` (letter per generator,
//! gap as suffix) when there are at most 26 generators; the canonical spelling
//! `g{i}d{δ}` is accepted everywhere and used as the display name otherwise.

use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::semigroup::NumericalSemigroup;
use crate::symcore::{Poly, Rat, Series, Var};

/// One coefficient slot of the template.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Slot {
    pub generator: usize,
    pub gap: u32,
    pub var: Var,
    pub canonical: String,
}

#[derive(Debug, Clone)]
pub struct NormalFormTemplate {
    semigroup: NumericalSemigroup,
    generators: Vec<Series>,
    slots: Vec<Slot>,
    by_name: HashMap<String, usize>,
}

/// A rational point of the ambient space: one value per template variable.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoefficientPoint {
    assignment: HashMap<Var, Rat>,
}

impl CoefficientPoint {
    pub fn assignment(&self) -> &HashMap<Var, Rat> {
        &self.assignment
    }

    pub fn get(&self, v: &Var) -> Option<&Rat> {
        self.assignment.get(v)
    }
}

fn display_name(generator: usize, gap: u32, aliased: bool) -> String {
    if aliased {
        format!("{}{}", (b'a' + generator as u8) as char, gap)
    } else {
        canonical_name(generator, gap)
    }
}

fn canonical_name(generator: usize, gap: u32) -> String {
    format!("g{generator}d{gap}")
}

impl NormalFormTemplate {
    pub fn build(semigroup: &NumericalSemigroup) -> Self {
        let c = semigroup.conductor();
        let aliased = semigroup.num_generators() <= 26;
        let mut generators = Vec::new();
        let mut slots = Vec::new();
        let mut by_name = HashMap::new();
        for (i, &v) in semigroup.generators().iter().enumerate() {
            let mut s = Series::monomial(c, v, Poly::one());
            if v < c {
                for &gap in semigroup.gaps().iter().filter(|&&d| d > v) {
                    let var = Var::new(display_name(i, gap, aliased));
                    s.add_term(gap, &Poly::var(var.clone()));
                    let canonical = canonical_name(i, gap);
                    by_name.insert(var.name().to_string(), slots.len());
                    by_name.insert(canonical.clone(), slots.len());
                    slots.push(Slot {
                        generator: i,
                        gap,
                        var,
                        canonical,
                    });
                }
            }
            generators.push(s);
        }
        NormalFormTemplate {
            semigroup: semigroup.clone(),
            generators,
            slots,
            by_name,
        }
    }

    pub fn semigroup(&self) -> &NumericalSemigroup {
        &self.semigroup
    }

    pub fn modulus(&self) -> u32 {
        self.semigroup.conductor()
    }

    /// The symbolic generator series `x_0(t), ..., x_g(t)`.
    pub fn generators(&self) -> &[Series] {
        &self.generators
    }

    pub fn slots(&self) -> &[Slot] {
        &self.slots
    }

    /// Template variables grouped by generator, then gap.
    pub fn variables(&self) -> Vec<Var> {
        self.slots.iter().map(|s| s.var.clone()).collect()
    }

    pub fn dimension(&self) -> usize {
        self.slots.len()
    }

    /// Looks up a variable by display alias or canonical name.
    pub fn resolve(&self, name: &str) -> Option<&Slot> {
        self.by_name.get(name.trim()).map(|&k| &self.slots[k])
    }

    /// A point where unspecified variables are 0.
    pub fn point_with_defaults<'a>(
        &self,
        values: impl IntoIterator<Item = (&'a str, Rat)>,
    ) -> Result<CoefficientPoint> {
        let mut assignment: HashMap<Var, Rat> =
            self.slots.iter().map(|s| (s.var.clone(), Rat::zero())).collect();
        for (name, value) in values {
            let slot = self
                .resolve(name)
                .ok_or_else(|| Error::UnknownVariable(name.to_string()))?;
            assignment.insert(slot.var.clone(), value);
        }
        Ok(CoefficientPoint { assignment })
    }

    /// A point from an assignment that must bind every template variable.
    pub fn point_from_map(&self, map: HashMap<Var, Rat>) -> Result<CoefficientPoint> {
        for s in &self.slots {
            if !map.contains_key(&s.var) {
                return Err(Error::UnboundVariable(s.var.name().to_string()));
            }
        }
        Ok(CoefficientPoint { assignment: map })
    }

    pub fn zero_point(&self) -> CoefficientPoint {
        CoefficientPoint {
            assignment: self.slots.iter().map(|s| (s.var.clone(), Rat::zero())).collect(),
        }
    }

    /// Substitutes the point's values into the generators.
    pub fn instantiate(&self, point: &CoefficientPoint) -> Result<Vec<Series>> {
        self.generators
            .iter()
            .map(|g| g.map_coeffs(|c| c.eval(&point.assignment).map(Poly::constant)))
            .collect()
    }

    pub fn to_json(&self) -> TemplateJson {
        let generators = self
            .semigroup
            .generators()
            .iter()
            .enumerate()
            .map(|(i, &lead)| GeneratorJson {
                lead,
                terms: self
                    .slots
                    .iter()
                    .filter(|s| s.generator == i)
                    .map(|s| TermJson {
                        exp: s.gap,
                        var: s.var.name().to_string(),
                    })
                    .collect(),
            })
            .collect();
        TemplateJson {
            generators,
            variables: self.slots.iter().map(|s| s.var.name().to_string()).collect(),
        }
    }
}

/// True iff each series is monic of order `v_i` with every other exponent a
/// gap of `Γ` above `v_i` (the zero series when `v_i >= c`).
pub fn is_normal_form(series: &[Series], semigroup: &NumericalSemigroup) -> bool {
    if series.len() != semigroup.num_generators() {
        return false;
    }
    let c = semigroup.conductor();
    series.iter().zip(semigroup.generators()).all(|(s, &v)| {
        if s.modulus() != c {
            return false;
        }
        if v >= c {
            return s.is_zero();
        }
        let mut terms = s.terms();
        match terms.next() {
            Some((e, lead)) if e == v && lead.as_constant().is_some_and(|r| r.is_one()) => {}
            _ => return false,
        }
        terms.all(|(e, _)| e > v && semigroup.is_gap(e))
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TemplateJson {
    pub generators: Vec<GeneratorJson>,
    pub variables: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GeneratorJson {
    pub lead: u32,
    pub terms: Vec<TermJson>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermJson {
    pub exp: u32,
    pub var: String,
}

#[cfg(test)]
mod tests {
    use super::*;

    fn tpl(g: &[u32]) -> NormalFormTemplate {
        NormalFormTemplate::build(&NumericalSemigroup::from_generators(g).unwrap())
    }

    fn num(m: u32, terms: &[(u32, i64)]) -> Series {
        Series::from_rats(m, terms.iter().map(|&(e, c)| (e, Rat::integer(c))))
    }

    #[test]
    fn four_eleven_fourteen() {
        let t = tpl(&[4, 11, 14]);
        assert_eq!(
            t.generators()[0].to_string(),
            "t^4 + (a5)*t^5 + (a6)*t^6 + (a7)*t^7 + (a9)*t^9 + (a10)*t^10 + (a13)*t^13 + (a17)*t^17 + (a21)*t^21"
        );
        assert_eq!(t.generators()[1].to_string(), "t^11 + (b13)*t^13 + (b17)*t^17 + (b21)*t^21");
        assert_eq!(t.generators()[2].to_string(), "t^14 + (c17)*t^17 + (c21)*t^21");
    }

    #[test]
    fn four_six_thirteen_variables() {
        let t = tpl(&[4, 6, 13]);
        let names: Vec<String> = t.variables().iter().map(|v| v.to_string()).collect();
        assert_eq!(names, ["a5", "a7", "a9", "a11", "a15", "b7", "b9", "b11", "b15", "c15"]);
        assert_eq!(t.resolve("g1d7").unwrap().var, Var::new("b7"));
    }

    #[test]
    fn two_five_truncated_generator() {
        let t = tpl(&[2, 5]);
        assert_eq!(t.generators()[0].to_string(), "t^2 + (a3)*t^3");
        assert!(t.generators()[1].is_zero());
        assert_eq!(t.dimension(), 1);
    }

    #[test]
    fn instantiate_points() {
        let t = tpl(&[4, 6, 13]);
        let gens = t.instantiate(&t.zero_point()).unwrap();
        assert_eq!(gens, vec![num(16, &[(4, 1)]), num(16, &[(6, 1)]), num(16, &[(13, 1)])]);
        let p = t.point_with_defaults([("b7", Rat::one())]).unwrap();
        let gens = t.instantiate(&p).unwrap();
        assert_eq!(gens[1], num(16, &[(6, 1), (7, 1)]));

        let t = tpl(&[2, 5]);
        let p = t.point_with_defaults([("a3", Rat::one())]).unwrap();
        assert_eq!(t.instantiate(&p).unwrap(), vec![num(4, &[(2, 1), (3, 1)]), Series::zero(4)]);
    }

    #[test]
    fn partial_points_rejected_where_total_required() {
        let t = tpl(&[4, 6, 13]);
        let mut m = t.zero_point().assignment().clone();
        m.remove(&Var::new("c15"));
        assert_eq!(t.point_from_map(m), Err(Error::UnboundVariable("c15".into())));
        assert!(matches!(
            t.point_with_defaults([("z9", Rat::one())]),
            Err(Error::UnknownVariable(_))
        ));
    }

    #[test]
    fn normal_form_checks() {
        let s = NumericalSemigroup::from_generators(&[4, 6, 13]).unwrap();
        let ok = [num(16, &[(4, 1)]), num(16, &[(6, 1), (7, 1)]), num(16, &[(13, 1)])];
        assert!(is_normal_form(&ok, &s));
        let bad = [num(16, &[(4, 1)]), num(16, &[(6, 1), (8, 1)]), num(16, &[(13, 1)])];
        assert!(!is_normal_form(&bad, &s));
        let bad = [num(16, &[(4, 2)]), num(16, &[(6, 1)]), num(16, &[(13, 1)])];
        assert!(!is_normal_form(&bad, &s));
        assert!(is_normal_form(tpl(&[4, 6, 13]).generators(), &s));
    }
}
