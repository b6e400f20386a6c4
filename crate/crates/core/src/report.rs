//! The aggregate analysis of one semigroup, and its JSON form.

use serde::{Deserialize, Serialize};

use crate::deceptive::{enumerate_sdec_below_conductor, BinomialJson, DeceptiveBinomial};
use crate::normalform::{NormalFormTemplate, TemplateJson};
use crate::semigroup::{NumericalSemigroup, PlaneCriterionReport};
use crate::variety::{
    defining_equations, eliminate_linear, EliminationResult, PresentationJson, VarietyPresentation,
};

#[derive(Debug, Clone)]
pub struct Analysis {
    pub sdec: Vec<DeceptiveBinomial>,
    pub presentation: VarietyPresentation,
    pub elimination: EliminationResult,
    pub plane: PlaneCriterionReport,
}

impl Analysis {
    pub fn run(semigroup: &NumericalSemigroup) -> Self {
        let presentation = defining_equations(semigroup);
        let elimination = eliminate_linear(&presentation);
        Analysis {
            sdec: enumerate_sdec_below_conductor(semigroup),
            plane: semigroup.is_plane_semigroup(),
            presentation,
            elimination,
        }
    }

    pub fn semigroup(&self) -> &NumericalSemigroup {
        &self.presentation.semigroup
    }

    pub fn template(&self) -> &NormalFormTemplate {
        &self.presentation.template
    }

    pub fn to_report(&self) -> AnalysisReport {
        let s = self.semigroup();
        AnalysisReport {
            semigroup: SemigroupJson {
                generators: s.generators().to_vec(),
                conductor: s.conductor(),
                gaps: s.gaps().to_vec(),
                ambient_dim: s.ambient_dimension(),
                plane: self.plane.clone(),
            },
            template: self.template().to_json(),
            sdec: self.sdec.iter().map(DeceptiveBinomial::to_json).collect(),
            presentation: self.presentation.to_json(Some(&self.elimination)),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SemigroupJson {
    pub generators: Vec<u32>,
    pub conductor: u32,
    pub gaps: Vec<u32>,
    pub ambient_dim: usize,
    pub plane: PlaneCriterionReport,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AnalysisReport {
    pub semigroup: SemigroupJson,
    pub template: TemplateJson,
    pub sdec: Vec<BinomialJson>,
    pub presentation: PresentationJson,
}

impl AnalysisReport {
    pub fn to_json_string(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn from_json_str(s: &str) -> serde_json::Result<Self> {
        serde_json::from_str(s)
    }

    /// The variable count agrees everywhere and `affine_dim <= ambient_dim`.
    pub fn is_consistent(&self) -> bool {
        let m = self.semigroup.ambient_dim;
        let dim_ok = self
            .presentation
            .elimination
            .as_ref()
            .and_then(|e| e.affine_dim)
            .map_or(true, |d| d <= m);
        self.presentation.ambient_dim == m && self.presentation.variables.len() == m && dim_ok
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn report_round_trip() {
        let s = NumericalSemigroup::from_generators(&[4, 6, 13]).unwrap();
        let r = Analysis::run(&s).to_report();
        assert!(r.is_consistent());
        assert_eq!(r.presentation.elimination.as_ref().unwrap().affine_dim, Some(9));
        let text = r.to_json_string();
        let back = AnalysisReport::from_json_str(&text).unwrap();
        assert_eq!(back, r);
        assert_eq!(back.to_json_string(), text);
    }
}
