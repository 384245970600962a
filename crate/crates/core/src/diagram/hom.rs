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

//! Homomorphisms between dot-diagrams, by exhaustive backtracking.
//!
//! Boxes are matched one at a time in an order that keeps the search
//! connected (boxes sharing dots with already-matched ones first, rarer labels
//! first among equals). Matching a box forces the images of all its port
//! dots, so only free dots are ever chosen independently.

use alloc::vec;
use alloc::vec::Vec;
use core::ops::ControlFlow;

use super::{BoxId, DotDiagram, DotId};

/// A pair `(box_map, dot_map)` from a source to a target diagram.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Hom {
    pub box_map: Vec<BoxId>,
    pub dot_map: Vec<DotId>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum HomConstraint {
    Any,
    /// The box function is a bijection; the dot function is unconstrained.
    BoxBijective,
    /// Bijective on boxes and dots.
    Iso,
}

fn surjective(map: &[usize], n: usize) -> bool {
    let mut hit = vec![false; n];
    for &x in map {
        hit[x] = true;
    }
    hit.into_iter().all(|h| h)
}

impl Hom {
    pub fn identity(d: &DotDiagram) -> Self {
        Hom {
            box_map: (0..d.num_boxes()).collect(),
            dot_map: (0..d.num_dots()).collect(),
        }
    }

    pub fn is_box_surjective(&self, target: &DotDiagram) -> bool {
        surjective(&self.box_map, target.num_boxes())
    }

    pub fn is_dot_surjective(&self, target: &DotDiagram) -> bool {
        surjective(&self.dot_map, target.num_dots())
    }
}

/// Checks every homomorphism condition directly. Independent of the search.
pub fn is_hom(source: &DotDiagram, target: &DotDiagram, hom: &Hom) -> bool {
    if hom.box_map.len() != source.num_boxes() || hom.dot_map.len() != source.num_dots() {
        return false;
    }
    if hom.box_map.iter().any(|&b| b >= target.num_boxes())
        || hom.dot_map.iter().any(|&d| d >= target.num_dots())
    {
        return false;
    }
    if source.inputs.len() != target.inputs.len() || source.outputs.len() != target.outputs.len() {
        return false;
    }
    let dots_ok = (0..source.num_dots()).all(|d| source.dots[d] == target.dots[hom.dot_map[d]]);
    let boxes_ok = source.boxes.iter().enumerate().all(|(b, node)| {
        let image = &target.boxes[hom.box_map[b]];
        image.label == node.label
            && image.inputs.len() == node.inputs.len()
            && image.outputs.len() == node.outputs.len()
            && node.inputs.iter().zip(&image.inputs).all(|(&x, &y)| hom.dot_map[x] == y)
            && node.outputs.iter().zip(&image.outputs).all(|(&x, &y)| hom.dot_map[x] == y)
    });
    let boundary_ok = source
        .inputs
        .iter()
        .zip(&target.inputs)
        .chain(source.outputs.iter().zip(&target.outputs))
        .all(|(&x, &y)| hom.dot_map[x] == y);
    dots_ok && boxes_ok && boundary_ok
}

struct Search<'a> {
    source: &'a DotDiagram,
    target: &'a DotDiagram,
    constraint: HomConstraint,
    order: Vec<BoxId>,
    candidates: Vec<Vec<BoxId>>,
    free: Vec<DotId>,
    box_map: Vec<BoxId>,
    box_used: Vec<bool>,
    dot_map: Vec<Option<DotId>>,
    dot_used: Vec<bool>,
    trail: Vec<DotId>,
}

impl<'a> Search<'a> {
    fn injective_boxes(&self) -> bool {
        self.constraint != HomConstraint::Any
    }

    fn injective_dots(&self) -> bool {
        self.constraint == HomConstraint::Iso
    }

    fn bind(&mut self, x: DotId, y: DotId) -> bool {
        match self.dot_map[x] {
            Some(z) => z == y,
            None => {
                if self.source.dots[x] != self.target.dots[y] {
                    return false;
                }
                if self.injective_dots() {
                    if self.dot_used[y] {
                        return false;
                    }
                    self.dot_used[y] = true;
                }
                self.dot_map[x] = Some(y);
                self.trail.push(x);
                true
            }
        }
    }

    fn undo_to(&mut self, mark: usize) {
        while self.trail.len() > mark {
            let x = self.trail.pop().unwrap();
            if let Some(y) = self.dot_map[x].take() {
                if self.injective_dots() {
                    self.dot_used[y] = false;
                }
            }
        }
    }

    fn bind_box(&mut self, b: BoxId, c: BoxId) -> bool {
        let (src, tgt) = (&self.source.boxes[b], &self.target.boxes[c]);
        let pairs: Vec<(DotId, DotId)> = src
            .inputs
            .iter()
            .zip(&tgt.inputs)
            .chain(src.outputs.iter().zip(&tgt.outputs))
            .map(|(&x, &y)| (x, y))
            .collect();
        pairs.into_iter().all(|(x, y)| self.bind(x, y))
    }

    fn emit(&self, visit: &mut dyn FnMut(&Hom) -> ControlFlow<()>) -> ControlFlow<()> {
        let hom = Hom {
            box_map: self.box_map.clone(),
            dot_map: self.dot_map.iter().map(|d| d.expect("all dots bound")).collect(),
        };
        visit(&hom)
    }

    fn boxes(&mut self, k: usize, visit: &mut dyn FnMut(&Hom) -> ControlFlow<()>) -> ControlFlow<()> {
        if k == self.order.len() {
            return self.free_dots(0, visit);
        }
        let b = self.order[k];
        for ci in 0..self.candidates[b].len() {
            let c = self.candidates[b][ci];
            if self.injective_boxes() && self.box_used[c] {
                continue;
            }
            let mark = self.trail.len();
            if self.bind_box(b, c) {
                self.box_map[b] = c;
                self.box_used[c] = true;
                let flow = self.boxes(k + 1, visit);
                self.box_used[c] = false;
                if flow.is_break() {
                    self.undo_to(mark);
                    return flow;
                }
            }
            self.undo_to(mark);
        }
        ControlFlow::Continue(())
    }

    fn free_dots(&mut self, k: usize, visit: &mut dyn FnMut(&Hom) -> ControlFlow<()>) -> ControlFlow<()> {
        if k == self.free.len() {
            return self.emit(visit);
        }
        let x = self.free[k];
        for y in 0..self.target.num_dots() {
            let mark = self.trail.len();
            if self.bind(x, y) {
                let flow = self.free_dots(k + 1, visit);
                self.undo_to(mark);
                flow?;
            }
        }
        ControlFlow::Continue(())
    }
}

/// Greedy connected box order: prefer boxes touching already-seen dots, then
/// boxes with fewer candidate images.
fn box_order(source: &DotDiagram, candidates: &[Vec<BoxId>]) -> Vec<BoxId> {
    let mut seen = vec![false; source.num_dots()];
    for &d in source.inputs.iter().chain(source.outputs.iter()) {
        seen[d] = true;
    }
    let mut placed = vec![false; source.num_boxes()];
    let mut order = Vec::with_capacity(source.num_boxes());
    for _ in 0..source.num_boxes() {
        let best = (0..source.num_boxes())
            .filter(|&b| !placed[b])
            .max_by_key(|&b| {
                let node = &source.boxes[b];
                let touching = node
                    .inputs
                    .iter()
                    .chain(node.outputs.iter())
                    .filter(|&&d| seen[d])
                    .count();
                (touching, usize::MAX - candidates[b].len(), usize::MAX - b)
            })
            .expect("unplaced box exists");
        placed[best] = true;
        order.push(best);
        let node = &source.boxes[best];
        for &d in node.inputs.iter().chain(node.outputs.iter()) {
            seen[d] = true;
        }
    }
    order
}

/// Visits every homomorphism `source -> target` satisfying `constraint`,
/// stopping early when `visit` breaks.
///
/// For open diagrams the boundary condition reads: the dot at boundary port
/// `in_i` (`out_j`) of `source` maps to the dot at the same port of `target`.
pub fn for_each_hom(
    source: &DotDiagram,
    target: &DotDiagram,
    constraint: HomConstraint,
    visit: &mut dyn FnMut(&Hom) -> ControlFlow<()>,
) {
    if source.inputs.len() != target.inputs.len() || source.outputs.len() != target.outputs.len() {
        return;
    }
    if constraint != HomConstraint::Any && source.num_boxes() != target.num_boxes() {
        return;
    }
    if constraint == HomConstraint::Iso && source.num_dots() != target.num_dots() {
        return;
    }
    let candidates: Vec<Vec<BoxId>> = source
        .boxes
        .iter()
        .map(|node| {
            (0..target.num_boxes())
                .filter(|&c| {
                    let t = &target.boxes[c];
                    t.label == node.label
                        && t.inputs.len() == node.inputs.len()
                        && t.outputs.len() == node.outputs.len()
                })
                .collect()
        })
        .collect();
    if candidates.iter().any(Vec::is_empty) {
        return;
    }
    let order = box_order(source, &candidates);
    let mut search = Search {
        source,
        target,
        constraint,
        order,
        candidates,
        free: source.free_dot_ids(),
        box_map: vec![0; source.num_boxes()],
        box_used: vec![false; target.num_boxes()],
        dot_map: vec![None; source.num_dots()],
        dot_used: vec![false; target.num_dots()],
        trail: Vec::new(),
    };
    let boundary: Vec<(DotId, DotId)> = source
        .inputs
        .iter()
        .zip(&target.inputs)
        .chain(source.outputs.iter().zip(&target.outputs))
        .map(|(&x, &y)| (x, y))
        .collect();
    for (x, y) in boundary {
        if !search.bind(x, y) {
            return;
        }
    }
    let _ = search.boxes(0, visit);
}

pub fn enumerate_homs(source: &DotDiagram, target: &DotDiagram, constraint: HomConstraint) -> Vec<Hom> {
    let mut out = Vec::new();
    for_each_hom(source, target, constraint, &mut |h| {
        out.push(h.clone());
        ControlFlow::Continue(())
    });
    out
}

pub fn count_homs(source: &DotDiagram, target: &DotDiagram, constraint: HomConstraint) -> usize {
    let mut n = 0;
    for_each_hom(source, target, constraint, &mut |_| {
        n += 1;
        ControlFlow::Continue(())
    });
    n
}

/// A boundary-fixing isomorphism `f -> g`, if one exists.
pub fn is_isomorphic(f: &DotDiagram, g: &DotDiagram) -> Option<Hom> {
    if f.num_boxes() != g.num_boxes() || f.num_dots() != g.num_dots() {
        return None;
    }
    let mut found = None;
    for_each_hom(f, g, HomConstraint::Iso, &mut |h| {
        found = Some(h.clone());
        ControlFlow::Break(())
    });
    found
}
