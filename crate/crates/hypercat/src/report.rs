// Licensed under the Apache License, Version 2.0 (the "License"); you may
// not use this file except in compliance with the License. You may obtain
// a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS, WITHOUT
// WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied. See the
// License for the specific language governing permissions and limitations
// under the License.

//! Versioned, replayable reports of equality decisions.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::str::FromStr;

use hypercat_core::complete::{close_up, decide_equal, CompleteError, DistinguisherReport, Route, Verdict};
use hypercat_core::semiring::{EvaluationPoint, GaussianRational, Polynomial, Ring, Semiring};
use hypercat_core::signature::Signature;
use hypercat_core::DotDiagram;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::formats::{DiagramFile, FormatError, ModelFile, SignatureFile};

pub const REPORT_FORMAT: &str = "hypercat-report";
pub const REPORT_VERSION: u32 = 1;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct StageFile {
    pub stage: String,
    pub lhs_value: String,
    pub rhs_value: String,
    pub separates: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PolynomialsFile {
    pub lhs: String,
    pub rhs: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WitnessFile {
    /// Scalar model over the signature extended with the port boxes.
    pub model: ModelFile,
    /// Box variable index to value.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub point: Option<BTreeMap<u32, String>>,
    pub lhs_value: String,
    pub rhs_value: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReportFile {
    pub format: String,
    pub version: u32,
    pub verdict: String,
    pub route: Option<String>,
    pub dagger_mode: bool,
    pub seed: u64,
    pub signature: SignatureFile,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub lhs_term: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub rhs_term: Option<String>,
    pub lhs: DiagramFile,
    pub rhs: DiagramFile,
    pub port_boxes: [String; 2],
    pub lhs_closure: DiagramFile,
    pub rhs_closure: DiagramFile,
    pub stages: Vec<StageFile>,
    pub polynomials: Option<PolynomialsFile>,
    pub empty_objects: Vec<String>,
    pub witness: Option<WitnessFile>,
}

fn verdict_name(v: Verdict) -> &'static str {
    match v {
        Verdict::Equal => "equal",
        Verdict::Distinct => "distinct",
    }
}

impl ReportFile {
    /// `sig`, `lhs` and `rhs` are the inputs `report` was computed from.
    pub fn new(
        report: &DistinguisherReport,
        sig: &Signature,
        lhs: &DotDiagram,
        rhs: &DotDiagram,
        terms: Option<(String, String)>,
    ) -> Self {
        let (lhs_term, rhs_term) = terms.map_or((None, None), |(l, r)| (Some(l), Some(r)));
        let ports = close_up(sig, lhs, rhs).map(|c| [c.ports.input, c.ports.output]);
        ReportFile {
            format: REPORT_FORMAT.into(),
            version: REPORT_VERSION,
            verdict: verdict_name(report.verdict).into(),
            route: report.route.map(|r| r.name().into()),
            dagger_mode: report.dagger_mode,
            seed: report.seed,
            signature: SignatureFile::from_signature(sig),
            lhs_term,
            rhs_term,
            lhs: DiagramFile::from_diagram(lhs),
            rhs: DiagramFile::from_diagram(rhs),
            port_boxes: ports.unwrap_or_default(),
            lhs_closure: DiagramFile::from_diagram(&report.lhs_closure),
            rhs_closure: DiagramFile::from_diagram(&report.rhs_closure),
            stages: report
                .stages
                .iter()
                .map(|s| StageFile {
                    stage: s.stage.name().into(),
                    lhs_value: s.lhs_value.clone(),
                    rhs_value: s.rhs_value.clone(),
                    separates: s.separates,
                })
                .collect(),
            polynomials: report.polynomials.as_ref().map(|(l, r)| PolynomialsFile {
                lhs: l.to_string(),
                rhs: r.to_string(),
            }),
            empty_objects: report.empty_objects.clone(),
            witness: report.witness.as_ref().map(|w| WitnessFile {
                model: ModelFile::from_model(&w.model, &report.signature),
                point: w
                    .point
                    .as_ref()
                    .map(|p| p.values().map(|(i, v)| (i, v.to_string())).collect()),
                lhs_value: w.lhs_value.to_string(),
                rhs_value: w.rhs_value.to_string(),
            }),
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serialises")
    }

    pub fn from_json(text: &str) -> Result<Self, FormatError> {
        Ok(serde_json::from_str(text)?)
    }

    pub fn is_distinct(&self) -> bool {
        self.verdict == "distinct"
    }

    /// Human-readable summary.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "verdict: {}", self.verdict);
        let _ = writeln!(out, "route: {}", self.route.as_deref().unwrap_or("-"));
        let _ = writeln!(out, "dagger: {}", self.dagger_mode);
        let _ = writeln!(out, "seed: {}", self.seed);
        if let (Some(l), Some(r)) = (&self.lhs_term, &self.rhs_term) {
            let _ = writeln!(out, "lhs: {l}");
            let _ = writeln!(out, "rhs: {r}");
        }
        for s in &self.stages {
            let _ = writeln!(
                out,
                "stage {}: lhs = {}, rhs = {}{}",
                s.stage,
                s.lhs_value,
                s.rhs_value,
                if s.separates { "  (separates)" } else { "" }
            );
        }
        if !self.empty_objects.is_empty() {
            let _ = writeln!(out, "empty index sets: {}", self.empty_objects.join(", "));
        }
        if let Some(w) = &self.witness {
            let _ = writeln!(out, "witness:");
            if let Some(p) = &w.point {
                let vals: Vec<String> = p.iter().map(|(i, v)| format!("X_b{i} = {v}")).collect();
                let _ = writeln!(out, "  point: {}", vals.join(", "));
            }
            let _ = writeln!(out, "  lhs value: {}", w.lhs_value);
            let _ = writeln!(out, "  rhs value: {}", w.rhs_value);
            let _ = writeln!(
                out,
                "  model: {}",
                serde_json::to_string(&w.model).expect("model serialises")
            );
        }
        out
    }
}

#[derive(Debug, Error)]
pub enum ReplayError {
    #[error(transparent)]
    Format(#[from] FormatError),
    #[error(transparent)]
    Complete(#[from] CompleteError),
    #[error("unsupported report format {0:?} version {1}")]
    Version(String, u32),
    #[error("replay mismatch: {0}")]
    Mismatch(String),
}

/// Re-derives the closures from the recorded inputs and re-evaluates the
/// witness. Equal verdicts are re-decided from scratch. Returns the verdict.
pub fn replay(report: &ReportFile) -> Result<Verdict, ReplayError> {
    if report.format != REPORT_FORMAT || report.version != REPORT_VERSION {
        return Err(ReplayError::Version(report.format.clone(), report.version));
    }
    let mismatch = |s: &str| Err(ReplayError::Mismatch(s.into()));
    let sig = report.signature.to_signature()?;
    let lhs = report.lhs.to_diagram()?;
    let rhs = report.rhs.to_diagram()?;
    let closure = close_up(&sig, &lhs, &rhs)?;
    if [closure.ports.input.clone(), closure.ports.output.clone()] != report.port_boxes {
        return mismatch("port box names");
    }
    if DiagramFile::from_diagram(&closure.lhs) != report.lhs_closure
        || DiagramFile::from_diagram(&closure.rhs) != report.rhs_closure
    {
        return mismatch("closures");
    }
    match (report.verdict.as_str(), &report.witness) {
        ("equal", None) => {
            let again = decide_equal(&sig, &lhs, &rhs, report.dagger_mode, report.seed)?;
            if again.verdict != Verdict::Equal {
                return mismatch("equal verdict not reproduced");
            }
            Ok(Verdict::Equal)
        }
        ("distinct", Some(w)) => {
            if report.route.as_deref().and_then(Route::from_name).is_none() {
                return mismatch("unknown route");
            }
            let model = w.model.to_model::<GaussianRational>(&closure.signature)?;
            model
                .validate(&closure.signature, report.dagger_mode && sig.is_dagger())
                .map_err(|e| ReplayError::Mismatch(e.to_string()))?;
            let eval = |d: &DotDiagram| -> Result<GaussianRational, ReplayError> {
                let m = model
                    .eval_contraction(d)
                    .map_err(|e| ReplayError::Mismatch(e.to_string()))?;
                Ok(m.data()[0].clone())
            };
            let (l, r) = (eval(&closure.lhs)?, eval(&closure.rhs)?);
            let parse = |s: &str| GaussianRational::from_str(s).map_err(|_| FormatError::Scalar(s.into()));
            if l == r {
                return mismatch("witness does not separate the closures");
            }
            if l != parse(&w.lhs_value)? || r != parse(&w.rhs_value)? {
                return mismatch("witness values differ from the recorded ones");
            }
            if let (Some(point), Some(polys)) = (&w.point, &report.polynomials) {
                let mut p = EvaluationPoint::new();
                for (i, v) in point {
                    p.set(*i, parse(v)?);
                }
                let poly = |s: &str| Polynomial::from_str(s).map_err(|_| FormatError::Scalar(s.into()));
                let diff = poly(&polys.lhs)?.minus(&poly(&polys.rhs)?);
                let at = diff.evaluate(&p).map_err(|e| ReplayError::Mismatch(e.to_string()))?;
                if at.is_zero() {
                    return mismatch("evaluation point is a root of the difference");
                }
            }
            Ok(Verdict::Distinct)
        }
        _ => mismatch("verdict and witness disagree"),
    }
}
