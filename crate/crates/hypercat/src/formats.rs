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

//! JSON interchange formats for signatures, diagrams, models and reports.

use std::collections::BTreeMap;
use std::fmt::Display;
use std::str::FromStr;

use hypercat_core::diagram::{BoxNode, DiagramError};
use hypercat_core::matrix::{IndexSet, Matrix};
use hypercat_core::semiring::{parse_rational, BigInt, BigRational, GaussianRational, Polynomial, Semiring};
use hypercat_core::signature::{GeneratorDecl, Signature, SignatureError};
use hypercat_core::{DotDiagram, Model};
use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum FormatError {
    #[error("invalid JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error(transparent)]
    Signature(#[from] SignatureError),
    #[error(transparent)]
    Diagram(#[from] DiagramError),
    #[error("model: {0}")]
    Model(String),
    #[error("cannot parse scalar {0:?}")]
    Scalar(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GeneratorEntry {
    pub name: String,
    pub dom: Vec<String>,
    pub cod: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub dagger_of: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SignatureFile {
    pub objects: Vec<String>,
    pub generators: Vec<GeneratorEntry>,
    #[serde(default)]
    pub dagger: bool,
}

impl SignatureFile {
    pub fn from_signature(sig: &Signature) -> Self {
        SignatureFile {
            objects: sig.objects().map(String::from).collect(),
            generators: sig
                .generators()
                .map(|g| GeneratorEntry {
                    name: g.name.clone(),
                    dom: g.dom.clone(),
                    cod: g.cod.clone(),
                    dagger_of: g.dagger_of.clone(),
                })
                .collect(),
            dagger: sig.is_dagger(),
        }
    }

    pub fn to_signature(&self) -> Result<Signature, FormatError> {
        let gens = self
            .generators
            .iter()
            .map(|g| GeneratorDecl {
                name: g.name.clone(),
                dom: g.dom.clone(),
                cod: g.cod.clone(),
                dagger_of: g.dagger_of.clone(),
            })
            .collect();
        Ok(Signature::new(self.objects.iter().cloned(), gens, self.dagger)?)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoxEntry {
    pub label: String,
    pub inputs: Vec<usize>,
    pub outputs: Vec<usize>,
}

/// A dot-diagram: dots are numbered from 0 and carry their object; every
/// box port and boundary port names the dot it is wired to.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DiagramFile {
    pub dots: Vec<String>,
    pub boxes: Vec<BoxEntry>,
    pub inputs: Vec<usize>,
    pub outputs: Vec<usize>,
}

impl DiagramFile {
    pub fn from_diagram(d: &DotDiagram) -> Self {
        DiagramFile {
            dots: d.dots().to_vec(),
            boxes: d
                .boxes()
                .iter()
                .map(|b| BoxEntry {
                    label: b.label.clone(),
                    inputs: b.inputs.clone(),
                    outputs: b.outputs.clone(),
                })
                .collect(),
            inputs: d.inputs().to_vec(),
            outputs: d.outputs().to_vec(),
        }
    }

    pub fn to_diagram(&self) -> Result<DotDiagram, FormatError> {
        let boxes = self
            .boxes
            .iter()
            .map(|b| BoxNode::new(&b.label, b.inputs.clone(), b.outputs.clone()))
            .collect();
        Ok(DotDiagram::new(boxes, self.dots.clone(), self.inputs.clone(), self.outputs.clone())?)
    }
}

/// Scalars that can be read from and written to model files.
pub trait Scalar: Semiring + Display {
    fn parse_scalar(s: &str) -> Result<Self, FormatError>;
}

impl Scalar for BigInt {
    fn parse_scalar(s: &str) -> Result<Self, FormatError> {
        BigInt::from_str(s.trim()).map_err(|_| FormatError::Scalar(s.into()))
    }
}

impl Scalar for BigRational {
    fn parse_scalar(s: &str) -> Result<Self, FormatError> {
        parse_rational(s).map_err(|_| FormatError::Scalar(s.into()))
    }
}

impl Scalar for GaussianRational {
    fn parse_scalar(s: &str) -> Result<Self, FormatError> {
        GaussianRational::from_str(s).map_err(|_| FormatError::Scalar(s.into()))
    }
}

impl Scalar for Polynomial {
    fn parse_scalar(s: &str) -> Result<Self, FormatError> {
        Polynomial::from_str(s).map_err(|_| FormatError::Scalar(s.into()))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum ObjectSpec {
    Size(usize),
    Labels(Vec<String>),
}

/// One non-zero entry: index labels for each codomain leg (`row`) and each
/// domain leg (`col`).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EntrySpec {
    pub row: Vec<String>,
    pub col: Vec<String>,
    pub value: String,
}

/// Index sets per object and sparse matrices per generator. Entries not
/// listed are zero.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ModelFile {
    pub objects: BTreeMap<String, ObjectSpec>,
    pub generators: BTreeMap<String, Vec<EntrySpec>>,
}

impl ModelFile {
    pub fn from_model<R: Scalar>(model: &Model<R>, sig: &Signature) -> Self {
        let objects = model
            .objects()
            .iter()
            .map(|(a, set)| {
                let spec = if *set == IndexSet::of_size(set.len()) {
                    ObjectSpec::Size(set.len())
                } else {
                    ObjectSpec::Labels(set.labels().to_vec())
                };
                (a.clone(), spec)
            })
            .collect();
        let mut generators = BTreeMap::new();
        for decl in sig.generators() {
            let Some(m) = model.generator(&decl.name) else {
                continue;
            };
            let entries = m
                .nonzero_entries()
                .map(|(r, c, v)| EntrySpec {
                    row: labels_of(model, &decl.cod, m.row_legs(), r),
                    col: labels_of(model, &decl.dom, m.col_legs(), c),
                    value: v.to_string(),
                })
                .collect();
            generators.insert(decl.name.clone(), entries);
        }
        ModelFile { objects, generators }
    }

    pub fn to_model<R: Scalar>(&self, sig: &Signature) -> Result<Model<R>, FormatError> {
        let mut model = Model::new();
        for (a, spec) in &self.objects {
            let set = match spec {
                ObjectSpec::Size(n) => IndexSet::of_size(*n),
                ObjectSpec::Labels(ls) => IndexSet::from_labels(ls.clone()),
            };
            model.set_object(a, set);
        }
        for decl in sig.generators() {
            let entries = self
                .generators
                .get(&decl.name)
                .ok_or_else(|| FormatError::Model(format!("no entries given for generator {:?}", decl.name)))?;
            let rows = model.legs(&decl.cod).map_err(|e| FormatError::Model(e.to_string()))?;
            let cols = model.legs(&decl.dom).map_err(|e| FormatError::Model(e.to_string()))?;
            let mut data = vec![R::zero(); rows.iter().product::<usize>() * cols.iter().product::<usize>()];
            let ncols: usize = cols.iter().product();
            for e in entries {
                let r = position(&model, &decl.cod, &e.row, &decl.name)?;
                let c = position(&model, &decl.dom, &e.col, &decl.name)?;
                let flat_r = hypercat_core::matrix::encode(&r, &rows);
                let flat_c = hypercat_core::matrix::encode(&c, &cols);
                let slot = &mut data[flat_r * ncols + flat_c];
                *slot = slot.plus(&R::parse_scalar(&e.value)?);
            }
            let m = Matrix::from_data(rows, cols, data).map_err(|e| FormatError::Model(e.to_string()))?;
            model.set_generator(&decl.name, m);
        }
        if let Some(extra) = self.generators.keys().find(|k| sig.generator(k).is_none()) {
            return Err(FormatError::Model(format!("unknown generator {extra:?}")));
        }
        Ok(model)
    }
}

fn labels_of<R: Semiring>(model: &Model<R>, word: &[String], legs: &[usize], flat: usize) -> Vec<String> {
    hypercat_core::matrix::decode(flat, legs)
        .into_iter()
        .zip(word)
        .map(|(i, a)| model.object(a).map_or_else(|| i.to_string(), |s| s.labels()[i].clone()))
        .collect()
}

fn position<R: Semiring>(model: &Model<R>, word: &[String], labels: &[String], gen: &str) -> Result<Vec<usize>, FormatError> {
    if word.len() != labels.len() {
        return Err(FormatError::Model(format!(
            "{gen}: expected {} indices, found {}",
            word.len(),
            labels.len()
        )));
    }
    word.iter()
        .zip(labels)
        .map(|(a, l)| {
            model
                .object(a)
                .and_then(|s| s.position(l))
                .ok_or_else(|| FormatError::Model(format!("{gen}: {l:?} is not an index of {a}")))
        })
        .collect()
}
