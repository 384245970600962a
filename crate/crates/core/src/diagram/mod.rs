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

//! Dot-diagrams and the hypergraph category they form.
//!
//! A [`DotDiagram`] is a finite set of boxes and a finite set of dots. Every
//! box port and every boundary port is wired to exactly one dot, and a dot
//! may be wired to any number of ports (including none). Composition glues
//! the output dots of one diagram to the input dots of the next and takes the
//! quotient, so adjacent Frobenius structure fuses into single dots.
//!
//! Boxes and dots are numbered `0..n`; these numbers carry no meaning beyond
//! the representative. Morphism equality is isomorphism, see
//! [`MorphismClass`] and [`is_isomorphic`].

mod hom;

use alloc::collections::BTreeMap;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use thiserror::Error;

use crate::signature::Signature;
use crate::union_find::UnionFind;
use crate::Word;

pub use hom::{count_homs, enumerate_homs, for_each_hom, is_hom, is_isomorphic, Hom, HomConstraint};

pub type BoxId = usize;
pub type DotId = usize;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DiagramError {
    #[error("dot index {0} out of range")]
    DotOutOfRange(usize),
    #[error("unknown generator {0:?}")]
    UnknownGenerator(String),
    #[error("undeclared object {0:?}")]
    UnknownObject(String),
    #[error("box {index} labelled {label:?} has {found} ports where its arity needs {expected}")]
    ArityMismatch {
        index: BoxId,
        label: String,
        expected: usize,
        found: usize,
    },
    #[error("box {index} port is wired to a dot of type {found:?}, expected {expected:?}")]
    PortType {
        index: BoxId,
        expected: String,
        found: String,
    },
    #[error("cannot compose: codomain {cod:?} does not match domain {dom:?}")]
    TypeMismatch { cod: Word, dom: Word },
    #[error("generator {0:?} has no dagger partner")]
    NoDagger(String),
    #[error("diagram is not closed")]
    NotClosed,
}

/// A box together with the dots its ports are wired to (`θ_in(b, i)` and
/// `θ_out(j, b)`).
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct BoxNode {
    pub label: String,
    pub inputs: Vec<DotId>,
    pub outputs: Vec<DotId>,
}

impl BoxNode {
    pub fn new(label: &str, inputs: Vec<DotId>, outputs: Vec<DotId>) -> Self {
        BoxNode {
            label: label.to_string(),
            inputs,
            outputs,
        }
    }
}

/// The generating morphisms of the free hypergraph category.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GeneratorKind {
    Box(String),
    Identity(String),
    Swap(String, String),
    Mu(String),
    Eta(String),
    Delta(String),
    Epsilon(String),
}

/// A dot-diagram representative. `==` on this type compares representations;
/// use [`is_isomorphic`] or [`MorphismClass`] for morphism equality.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DotDiagram {
    boxes: Vec<BoxNode>,
    dots: Vec<String>,
    inputs: Vec<DotId>,
    outputs: Vec<DotId>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Classification {
    pub simple: bool,
    pub closed: bool,
}

/// Ports wired to one dot. "Incoming" ports feed the dot (boundary inputs and
/// box outputs), "outgoing" ports read from it (box inputs and boundary
/// outputs).
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct DotPorts {
    pub boundary_inputs: Vec<usize>,
    pub box_outputs: Vec<(BoxId, usize)>,
    pub box_inputs: Vec<(BoxId, usize)>,
    pub boundary_outputs: Vec<usize>,
}

impl DotPorts {
    pub fn incoming(&self) -> usize {
        self.boundary_inputs.len() + self.box_outputs.len()
    }

    pub fn outgoing(&self) -> usize {
        self.box_inputs.len() + self.boundary_outputs.len()
    }

    pub fn is_free(&self) -> bool {
        self.incoming() == 0 && self.outgoing() == 0
    }
}

impl DotDiagram {
    pub fn new(
        boxes: Vec<BoxNode>,
        dots: Vec<String>,
        inputs: Vec<DotId>,
        outputs: Vec<DotId>,
    ) -> Result<Self, DiagramError> {
        let n = dots.len();
        let all = boxes
            .iter()
            .flat_map(|b| b.inputs.iter().chain(b.outputs.iter()))
            .chain(inputs.iter())
            .chain(outputs.iter());
        for &d in all {
            if d >= n {
                return Err(DiagramError::DotOutOfRange(d));
            }
        }
        Ok(DotDiagram {
            boxes,
            dots,
            inputs,
            outputs,
        })
    }

    /// The monoidal unit: no boxes, no dots.
    pub fn empty() -> Self {
        DotDiagram {
            boxes: Vec::new(),
            dots: Vec::new(),
            inputs: Vec::new(),
            outputs: Vec::new(),
        }
    }

    /// A single dot with `m` boundary inputs and `n` boundary outputs.
    pub fn spider(m: usize, n: usize, object: &str) -> Self {
        DotDiagram {
            boxes: Vec::new(),
            dots: vec![object.to_string()],
            inputs: vec![0; m],
            outputs: vec![0; n],
        }
    }

    /// Closed diagram consisting only of free dots, `count` of each label.
    pub fn free_dots(counts: &BTreeMap<String, usize>) -> Self {
        let dots = counts
            .iter()
            .flat_map(|(obj, &k)| core::iter::repeat(obj.clone()).take(k))
            .collect();
        DotDiagram {
            boxes: Vec::new(),
            dots,
            inputs: Vec::new(),
            outputs: Vec::new(),
        }
    }

    /// Tensor of identities on `word`.
    pub fn identity(word: &[String]) -> Self {
        DotDiagram {
            boxes: Vec::new(),
            dots: word.to_vec(),
            inputs: (0..word.len()).collect(),
            outputs: (0..word.len()).collect(),
        }
    }

    pub fn generator(kind: &GeneratorKind, sig: &Signature) -> Result<Self, DiagramError> {
        let obj = |name: &String| -> Result<(), DiagramError> {
            if sig.has_object(name) {
                Ok(())
            } else {
                Err(DiagramError::UnknownObject(name.clone()))
            }
        };
        let single = |a: &String, m: usize, n: usize| -> Result<Self, DiagramError> {
            obj(a)?;
            Ok(Self::spider(m, n, a))
        };
        match kind {
            GeneratorKind::Box(name) => {
                let decl = sig
                    .generator(name)
                    .ok_or_else(|| DiagramError::UnknownGenerator(name.clone()))?;
                let m = decl.dom.len();
                let dots: Vec<String> = decl.dom.iter().chain(decl.cod.iter()).cloned().collect();
                let ins: Vec<DotId> = (0..m).collect();
                let outs: Vec<DotId> = (m..dots.len()).collect();
                Ok(DotDiagram {
                    boxes: vec![BoxNode {
                        label: name.clone(),
                        inputs: ins.clone(),
                        outputs: outs.clone(),
                    }],
                    dots,
                    inputs: ins,
                    outputs: outs,
                })
            }
            GeneratorKind::Identity(a) => single(a, 1, 1),
            GeneratorKind::Mu(a) => single(a, 2, 1),
            GeneratorKind::Eta(a) => single(a, 0, 1),
            GeneratorKind::Delta(a) => single(a, 1, 2),
            GeneratorKind::Epsilon(a) => single(a, 1, 0),
            GeneratorKind::Swap(a, b) => {
                obj(a)?;
                obj(b)?;
                Ok(DotDiagram {
                    boxes: Vec::new(),
                    dots: vec![a.clone(), b.clone()],
                    inputs: vec![0, 1],
                    outputs: vec![1, 0],
                })
            }
        }
    }

    pub fn boxes(&self) -> &[BoxNode] {
        &self.boxes
    }

    pub fn dots(&self) -> &[String] {
        &self.dots
    }

    pub fn inputs(&self) -> &[DotId] {
        &self.inputs
    }

    pub fn outputs(&self) -> &[DotId] {
        &self.outputs
    }

    pub fn num_boxes(&self) -> usize {
        self.boxes.len()
    }

    pub fn num_dots(&self) -> usize {
        self.dots.len()
    }

    pub fn dom(&self) -> Word {
        self.inputs.iter().map(|&d| self.dots[d].clone()).collect()
    }

    pub fn cod(&self) -> Word {
        self.outputs.iter().map(|&d| self.dots[d].clone()).collect()
    }

    /// Checks the typing conditions against `sig`: every box label is a
    /// generator, port counts match its arity, and every port is wired to a
    /// dot of the matching object.
    pub fn validate(&self, sig: &Signature) -> Result<(), DiagramError> {
        for obj in &self.dots {
            if !sig.has_object(obj) {
                return Err(DiagramError::UnknownObject(obj.clone()));
            }
        }
        for (index, b) in self.boxes.iter().enumerate() {
            let decl = sig
                .generator(&b.label)
                .ok_or_else(|| DiagramError::UnknownGenerator(b.label.clone()))?;
            let expected = decl.dom.len() + decl.cod.len();
            let found = b.inputs.len() + b.outputs.len();
            if b.inputs.len() != decl.dom.len() || b.outputs.len() != decl.cod.len() {
                return Err(DiagramError::ArityMismatch {
                    index,
                    label: b.label.clone(),
                    expected,
                    found,
                });
            }
            let wired = b.inputs.iter().zip(&decl.dom).chain(b.outputs.iter().zip(&decl.cod));
            for (&d, want) in wired {
                if self.dots[d] != *want {
                    return Err(DiagramError::PortType {
                        index,
                        expected: want.clone(),
                        found: self.dots[d].clone(),
                    });
                }
            }
        }
        Ok(())
    }

    /// Per-dot port lists, in ascending port order.
    pub fn dot_ports(&self) -> Vec<DotPorts> {
        let mut ports = vec![DotPorts::default(); self.dots.len()];
        for (i, &d) in self.inputs.iter().enumerate() {
            ports[d].boundary_inputs.push(i);
        }
        for (b, node) in self.boxes.iter().enumerate() {
            for (j, &d) in node.outputs.iter().enumerate() {
                ports[d].box_outputs.push((b, j));
            }
            for (i, &d) in node.inputs.iter().enumerate() {
                ports[d].box_inputs.push((b, i));
            }
        }
        for (j, &d) in self.outputs.iter().enumerate() {
            ports[d].boundary_outputs.push(j);
        }
        ports
    }

    /// Sequential composition `next ∘ self`: the output dots of `self` are
    /// glued to the input dots of `next` position by position.
    pub fn compose(&self, next: &DotDiagram) -> Result<DotDiagram, DiagramError> {
        let (cod, dom) = (self.cod(), next.dom());
        if cod != dom {
            return Err(DiagramError::TypeMismatch { cod, dom });
        }
        let offset = self.dots.len();
        let mut uf = UnionFind::new(offset + next.dots.len());
        for (&a, &b) in self.outputs.iter().zip(&next.inputs) {
            uf.union(a, offset + b);
        }
        let (class, count) = uf.classes();
        let mut dots = vec![String::new(); count];
        for (x, label) in self.dots.iter().chain(next.dots.iter()).enumerate() {
            dots[class[x]] = label.clone();
        }
        let left = |d: DotId| class[d];
        let right = |d: DotId| class[offset + d];
        let mut boxes = Vec::with_capacity(self.boxes.len() + next.boxes.len());
        for b in &self.boxes {
            boxes.push(BoxNode {
                label: b.label.clone(),
                inputs: b.inputs.iter().map(|&d| left(d)).collect(),
                outputs: b.outputs.iter().map(|&d| left(d)).collect(),
            });
        }
        for b in &next.boxes {
            boxes.push(BoxNode {
                label: b.label.clone(),
                inputs: b.inputs.iter().map(|&d| right(d)).collect(),
                outputs: b.outputs.iter().map(|&d| right(d)).collect(),
            });
        }
        Ok(DotDiagram {
            boxes,
            dots,
            inputs: self.inputs.iter().map(|&d| left(d)).collect(),
            outputs: next.outputs.iter().map(|&d| right(d)).collect(),
        })
    }

    /// Disjoint union, boundaries concatenated `self` first.
    pub fn tensor(&self, other: &DotDiagram) -> DotDiagram {
        let offset = self.dots.len();
        let shift = |ds: &[DotId]| ds.iter().map(|&d| d + offset).collect::<Vec<_>>();
        let mut boxes = self.boxes.clone();
        boxes.extend(other.boxes.iter().map(|b| BoxNode {
            label: b.label.clone(),
            inputs: shift(&b.inputs),
            outputs: shift(&b.outputs),
        }));
        let mut dots = self.dots.clone();
        dots.extend(other.dots.iter().cloned());
        let mut inputs = self.inputs.clone();
        inputs.extend(shift(&other.inputs));
        let mut outputs = self.outputs.clone();
        outputs.extend(shift(&other.outputs));
        DotDiagram {
            boxes,
            dots,
            inputs,
            outputs,
        }
    }

    /// Relabels every box by its dagger partner and exchanges inputs with
    /// outputs, both on boxes and on the boundary.
    pub fn dagger(&self, sig: &Signature) -> Result<DotDiagram, DiagramError> {
        let boxes = self
            .boxes
            .iter()
            .map(|b| {
                let label = sig
                    .dagger_name(&b.label)
                    .ok_or_else(|| DiagramError::NoDagger(b.label.clone()))?;
                Ok(BoxNode {
                    label: label.to_string(),
                    inputs: b.outputs.clone(),
                    outputs: b.inputs.clone(),
                })
            })
            .collect::<Result<Vec<_>, DiagramError>>()?;
        Ok(DotDiagram {
            boxes,
            dots: self.dots.clone(),
            inputs: self.outputs.clone(),
            outputs: self.inputs.clone(),
        })
    }

    /// Dots wired to no port at all.
    pub fn free_dot_ids(&self) -> Vec<DotId> {
        let mut touched = vec![false; self.dots.len()];
        let all = self
            .boxes
            .iter()
            .flat_map(|b| b.inputs.iter().chain(b.outputs.iter()))
            .chain(self.inputs.iter())
            .chain(self.outputs.iter());
        for &d in all {
            touched[d] = true;
        }
        (0..self.dots.len()).filter(|&d| !touched[d]).collect()
    }

    pub fn is_closed(&self) -> bool {
        self.inputs.is_empty() && self.outputs.is_empty()
    }

    /// Every dot is reached by some wiring (box port or boundary port).
    pub fn is_simple(&self) -> bool {
        self.free_dot_ids().is_empty()
    }

    pub fn classify(&self) -> Classification {
        Classification {
            simple: self.is_simple(),
            closed: self.is_closed(),
        }
    }

    /// Splits a closed diagram as `simple_part ⊗ free dots`.
    pub fn split_free_dots(&self) -> Result<(DotDiagram, BTreeMap<String, usize>), DiagramError> {
        if !self.is_closed() {
            return Err(DiagramError::NotClosed);
        }
        let free = self.free_dot_ids();
        let mut counts = BTreeMap::new();
        let mut is_free = vec![false; self.dots.len()];
        for &d in &free {
            is_free[d] = true;
            *counts.entry(self.dots[d].clone()).or_insert(0) += 1;
        }
        let mut renumber = vec![usize::MAX; self.dots.len()];
        let mut dots = Vec::new();
        for (d, label) in self.dots.iter().enumerate() {
            if !is_free[d] {
                renumber[d] = dots.len();
                dots.push(label.clone());
            }
        }
        let boxes = self
            .boxes
            .iter()
            .map(|b| BoxNode {
                label: b.label.clone(),
                inputs: b.inputs.iter().map(|&d| renumber[d]).collect(),
                outputs: b.outputs.iter().map(|&d| renumber[d]).collect(),
            })
            .collect();
        let simple = DotDiagram {
            boxes,
            dots,
            inputs: Vec::new(),
            outputs: Vec::new(),
        };
        Ok((simple, counts))
    }

    fn renumbered(&self, box_order: &[BoxId], dot_of: &[DotId]) -> DotDiagram {
        let mut dots = vec![String::new(); self.dots.len()];
        for (d, label) in self.dots.iter().enumerate() {
            dots[dot_of[d]] = label.clone();
        }
        let boxes = box_order
            .iter()
            .map(|&b| {
                let node = &self.boxes[b];
                BoxNode {
                    label: node.label.clone(),
                    inputs: node.inputs.iter().map(|&d| dot_of[d]).collect(),
                    outputs: node.outputs.iter().map(|&d| dot_of[d]).collect(),
                }
            })
            .collect();
        DotDiagram {
            boxes,
            dots,
            inputs: self.inputs.iter().map(|&d| dot_of[d]).collect(),
            outputs: self.outputs.iter().map(|&d| dot_of[d]).collect(),
        }
    }

    /// Best-effort canonical representative.
    ///
    /// Dots are numbered by first appearance (boundary inputs, boundary
    /// outputs, then box ports), free dots last by label, and boxes are
    /// sorted by label and wiring; the two steps are alternated until they
    /// stabilise. Isomorphic diagrams usually, but not always, get identical
    /// representatives; [`is_isomorphic`] is the source of truth.
    pub fn canonical(&self) -> DotDiagram {
        let mut current = self.clone();
        for _ in 0..(self.boxes.len() + 2) {
            let mut order: Vec<BoxId> = (0..current.boxes.len()).collect();
            order.sort_by(|&a, &b| current.boxes[a].cmp(&current.boxes[b]));
            let sorted = current.renumbered(&order, &(0..current.dots.len()).collect::<Vec<_>>());

            let mut dot_of = vec![usize::MAX; sorted.dots.len()];
            let mut next = 0;
            let sequence = sorted
                .inputs
                .iter()
                .chain(sorted.outputs.iter())
                .chain(sorted.boxes.iter().flat_map(|b| b.inputs.iter().chain(b.outputs.iter())));
            for &d in sequence {
                if dot_of[d] == usize::MAX {
                    dot_of[d] = next;
                    next += 1;
                }
            }
            let mut free: Vec<DotId> = (0..sorted.dots.len()).filter(|&d| dot_of[d] == usize::MAX).collect();
            free.sort_by(|&a, &b| sorted.dots[a].cmp(&sorted.dots[b]));
            for d in free {
                dot_of[d] = next;
                next += 1;
            }
            let renamed = sorted.renumbered(&(0..sorted.boxes.len()).collect::<Vec<_>>(), &dot_of);
            if renamed == current {
                break;
            }
            current = renamed;
        }
        current
    }
}

impl fmt::Display for DotDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "dots[")?;
        for (d, label) in self.dots.iter().enumerate() {
            if d > 0 {
                write!(f, " ")?;
            }
            write!(f, "d{d}:{label}")?;
        }
        write!(f, "] in{:?} out{:?}", self.inputs, self.outputs)?;
        for (b, node) in self.boxes.iter().enumerate() {
            write!(f, " b{b}:{}{:?}->{:?}", node.label, node.inputs, node.outputs)?;
        }
        Ok(())
    }
}

/// A morphism of the free hypergraph category: an isomorphism class of
/// dot-diagrams. Equality is decided by boundary-fixing isomorphism search.
#[derive(Debug, Clone)]
pub struct MorphismClass {
    representative: DotDiagram,
}

impl MorphismClass {
    pub fn new(representative: DotDiagram) -> Self {
        MorphismClass { representative }
    }

    pub fn generator(kind: &GeneratorKind, sig: &Signature) -> Result<Self, DiagramError> {
        DotDiagram::generator(kind, sig).map(Self::new)
    }

    pub fn representative(&self) -> &DotDiagram {
        &self.representative
    }

    pub fn into_representative(self) -> DotDiagram {
        self.representative
    }

    pub fn dom(&self) -> Word {
        self.representative.dom()
    }

    pub fn cod(&self) -> Word {
        self.representative.cod()
    }

    /// `next ∘ self`.
    pub fn then(&self, next: &MorphismClass) -> Result<Self, DiagramError> {
        self.representative.compose(&next.representative).map(Self::new)
    }

    pub fn tensor(&self, other: &MorphismClass) -> Self {
        Self::new(self.representative.tensor(&other.representative))
    }

    pub fn dagger(&self, sig: &Signature) -> Result<Self, DiagramError> {
        self.representative.dagger(sig).map(Self::new)
    }
}

impl PartialEq for MorphismClass {
    fn eq(&self, other: &Self) -> bool {
        is_isomorphic(&self.representative, &other.representative).is_some()
    }
}

impl Eq for MorphismClass {}

impl From<DotDiagram> for MorphismClass {
    fn from(d: DotDiagram) -> Self {
        MorphismClass::new(d)
    }
}

#[cfg(test)]
mod tests;
