//! Defining equations of the moduli space, linear elimination, and point tests.

use std::collections::{BTreeSet, HashMap};
use std::fmt;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::deceptive::{enumerate_sdec_below_conductor, idec_generators_3gen, DeceptiveBinomial};
use crate::error::{Error, Result};
use crate::genpoly::GenPoly;
use crate::normalform::{CoefficientPoint, NormalFormTemplate};
use crate::reduction::{phi_eval, reduce_subset, Reducer};
use crate::semigroup::NumericalSemigroup;
use crate::symcore::{Poly, Rat, Var};

/// One defining equation: the coefficient of `t^gap` in the reduced image of `source`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Equation {
    pub source: DeceptiveBinomial,
    pub gap: u32,
    pub poly: Poly,
}

impl Equation {
    pub fn tag(&self) -> String {
        format!("{} (gap {})", self.source, self.gap)
    }
}

#[derive(Debug, Clone)]
pub struct VarietyPresentation {
    pub semigroup: NumericalSemigroup,
    pub template: NormalFormTemplate,
    pub ambient_dim: usize,
    pub equations: Vec<Equation>,
}

/// Reduced image of one binomial under the symbolic template.
pub fn binomial_equations(
    template: &NormalFormTemplate,
    binomial: &DeceptiveBinomial,
) -> Result<Vec<Equation>> {
    let gens = template.generators();
    let image = phi_eval(gens, &binomial.to_genpoly())?;
    let trace = Reducer::new(template.semigroup(), gens)?.reduce(&image)?;
    Ok(trace
        .reduced
        .terms()
        .map(|(gap, poly)| Equation {
            source: binomial.clone(),
            gap,
            poly: poly.clone(),
        })
        .collect())
}

/// Symbolically reduces every deceptive binomial below the conductor and
/// collects the surviving gap coefficients.
pub fn defining_equations(semigroup: &NumericalSemigroup) -> VarietyPresentation {
    let template = NormalFormTemplate::build(semigroup);
    let sdec = enumerate_sdec_below_conductor(semigroup);
    let per_binomial: Vec<Vec<Equation>> = sdec
        .par_iter()
        .map(|b| binomial_equations(&template, b).expect("template generators are in normal form"))
        .collect();
    let mut seen = BTreeSet::new();
    let mut equations = Vec::new();
    for eq in per_binomial.into_iter().flatten() {
        if seen.insert(eq.poly.to_string()) {
            equations.push(eq);
        }
    }
    VarietyPresentation {
        ambient_dim: semigroup.ambient_dimension(),
        semigroup: semigroup.clone(),
        template,
        equations,
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EliminationResult {
    /// Solved variables with their expressions in the surviving variables, in
    /// the order they were eliminated.
    pub solved: Vec<(Var, Poly)>,
    pub residual: Vec<Poly>,
    pub affine_dim: Option<usize>,
}

impl EliminationResult {
    /// Completes `free` (values for the unsolved variables; missing ones are 0)
    /// by evaluating the solved expressions.
    pub fn complete_point(
        &self,
        template: &NormalFormTemplate,
        free: &HashMap<Var, Rat>,
    ) -> Result<CoefficientPoint> {
        let solved: BTreeSet<&Var> = self.solved.iter().map(|(v, _)| v).collect();
        let mut map: HashMap<Var, Rat> = template
            .variables()
            .into_iter()
            .filter(|v| !solved.contains(v))
            .map(|v| {
                let x = free.get(&v).cloned().unwrap_or_default();
                (v, x)
            })
            .collect();
        let mut values = Vec::with_capacity(self.solved.len());
        for (v, expr) in &self.solved {
            values.push((v.clone(), expr.eval(&map)?));
        }
        map.extend(values);
        template.point_from_map(map)
    }
}

/// Greedy linear elimination in canonical order: equations by tag, variables
/// by [`elimination_order`].
pub fn eliminate_linear(presentation: &VarietyPresentation) -> EliminationResult {
    let eqs: Vec<Poly> = presentation.equations.iter().map(|e| e.poly.clone()).collect();
    eliminate_linear_ordered(&eqs, &elimination_order(&presentation.template), presentation.ambient_dim)
}

/// Candidate order for solving: the highest-indexed coefficient first, i.e.
/// largest gap, then latest generator.
pub fn elimination_order(template: &NormalFormTemplate) -> Vec<Var> {
    let mut slots: Vec<_> = template.slots().iter().collect();
    slots.sort_by(|a, b| (b.gap, b.generator).cmp(&(a.gap, a.generator)));
    slots.into_iter().map(|s| s.var.clone()).collect()
}

/// Greedy linear elimination scanning `equations` in the given order and,
/// within each, candidate variables in `variable_order`.
pub fn eliminate_linear_ordered(
    equations: &[Poly],
    variable_order: &[Var],
    ambient_dim: usize,
) -> EliminationResult {
    let mut eqs: Vec<Poly> = equations.iter().filter(|p| !p.is_zero()).cloned().collect();
    let mut solved: Vec<(Var, Poly)> = Vec::new();
    'outer: loop {
        for i in 0..eqs.len() {
            let present = eqs[i].variables();
            for v in variable_order.iter().filter(|v| present.contains(v)) {
                let Some((alpha, h)) = eqs[i].extract_linear(v) else {
                    continue;
                };
                let expr = h.scale(&(-alpha.recip().expect("nonzero")));
                eqs.remove(i);
                for e in eqs.iter_mut() {
                    *e = e.substitute(v, &expr);
                }
                eqs.retain(|p| !p.is_zero());
                for (_, s) in solved.iter_mut() {
                    *s = s.substitute(v, &expr);
                }
                solved.push((v.clone(), expr));
                continue 'outer;
            }
        }
        break;
    }
    let affine_dim = eqs.is_empty().then(|| ambient_dim - solved.len());
    EliminationResult {
        solved,
        residual: eqs,
        affine_dim,
    }
}

/// `M(Γ) - #{gaps > d}` when exactly one deceptive binomial (of degree `d`)
/// lies below the conductor.
pub fn predicted_dim_single_binomial(semigroup: &NumericalSemigroup) -> Option<usize> {
    let sdec = enumerate_sdec_below_conductor(semigroup);
    match sdec.as_slice() {
        [only] => Some(semigroup.ambient_dimension() - semigroup.gaps_above(only.degree as u32)),
        _ => None,
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MembershipReport {
    pub in_variety: bool,
    /// Indices into the presentation's equations that do not vanish.
    pub violated: Vec<usize>,
}

impl VarietyPresentation {
    /// Evaluates every equation at `point`.
    pub fn membership(&self, point: &CoefficientPoint) -> Result<MembershipReport> {
        let mut violated = Vec::new();
        for (k, eq) in self.equations.iter().enumerate() {
            if !eq.poly.eval(point.assignment())?.is_zero() {
                violated.push(k);
            }
        }
        Ok(MembershipReport {
            in_variety: violated.is_empty(),
            violated,
        })
    }

    pub fn to_json(&self, elimination: Option<&EliminationResult>) -> PresentationJson {
        PresentationJson {
            semigroup: self.semigroup.generators().to_vec(),
            ambient_dim: self.ambient_dim,
            variables: self
                .template
                .variables()
                .iter()
                .map(|v| v.name().to_string())
                .collect(),
            equations: self
                .equations
                .iter()
                .map(|e| EquationJson {
                    source: SourceJson {
                        lhs: e.source.lhs.exponents.clone(),
                        rhs: e.source.rhs.exponents.clone(),
                    },
                    gap: e.gap,
                    poly: e.poly.to_string(),
                })
                .collect(),
            elimination: elimination.map(|r| EliminationJson {
                solved: r
                    .solved
                    .iter()
                    .map(|(v, p)| SolvedJson {
                        var: v.name().to_string(),
                        expr: p.to_string(),
                    })
                    .collect(),
                residual: r.residual.iter().map(|p| p.to_string()).collect(),
                affine_dim: r.affine_dim,
            }),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PlaneReport {
    pub semigroup_is_plane: bool,
    pub is_plane_point: bool,
    /// Coefficient of `t^{v_2}` in the restricted reduction (0 when the
    /// semigroup itself fails the plane criterion).
    pub leading_coefficient: Rat,
}

/// Whether the algebra at `point` is generated by `x_0(t), x_1(t)` alone.
///
/// With `x^{k0} = y^{k1}` the minimal pure relation, this holds iff reducing
/// `φ(y^{k1} - x^{k0})` with `x, y` only leaves order exactly `v_2`.
pub fn plane_test_3gen(
    presentation: &VarietyPresentation,
    point: &CoefficientPoint,
) -> Result<PlaneReport> {
    let semigroup = &presentation.semigroup;
    if semigroup.num_generators() != 3 {
        return Err(Error::WrongGeneratorCount(semigroup.num_generators()));
    }
    let m = presentation.membership(point)?;
    if !m.in_variety {
        let tags: Vec<String> = m
            .violated
            .iter()
            .map(|&k| presentation.equations[k].tag())
            .collect();
        return Err(Error::NotInVariety(tags.join(", ")));
    }
    if !semigroup.is_plane_semigroup().is_plane {
        return Ok(PlaneReport {
            semigroup_is_plane: false,
            is_plane_point: false,
            leading_coefficient: Rat::zero(),
        });
    }
    let rel = idec_generators_3gen(semigroup)?;
    // A plane semigroup has v_2 > lcm(v_0, v_1), so the minimal x-power relation is pure.
    debug_assert_eq!(rel.m.1, 0);
    let f = GenPoly::binomial(&[0, rel.m.0, 0], &[rel.k0, 0, 0]);
    let gens = presentation.template.instantiate(point)?;
    let image = phi_eval(&gens, &f)?;
    let trace = reduce_subset(semigroup, &[0, 1], &gens, &image)?;
    let v2 = semigroup.generators()[2];
    let lead = trace
        .reduced
        .coeff(v2)
        .as_constant()
        .expect("numeric generators give constant coefficients");
    Ok(PlaneReport {
        semigroup_is_plane: true,
        is_plane_point: trace.reduced.order() == Some(v2),
        leading_coefficient: lead,
    })
}

impl fmt::Display for EliminationResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (v, p) in &self.solved {
            writeln!(f, "  {v} = {p}")?;
        }
        for p in &self.residual {
            writeln!(f, "  residual: {p} = 0")?;
        }
        match self.affine_dim {
            Some(d) => write!(f, "  affine space of dimension {d}"),
            None => write!(f, "  not identified as an affine space"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PresentationJson {
    pub semigroup: Vec<u32>,
    pub ambient_dim: usize,
    pub variables: Vec<String>,
    pub equations: Vec<EquationJson>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub elimination: Option<EliminationJson>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EquationJson {
    pub source: SourceJson,
    pub gap: u32,
    pub poly: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SourceJson {
    pub lhs: Vec<u32>,
    pub rhs: Vec<u32>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EliminationJson {
    pub solved: Vec<SolvedJson>,
    pub residual: Vec<String>,
    pub affine_dim: Option<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SolvedJson {
    pub var: String,
    pub expr: String,
}
