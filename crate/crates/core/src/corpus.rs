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

//! Seeded generators and exhaustive enumerations of terms, diagrams and
//! models, for tests and benchmarks.

use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use rand::seq::SliceRandom;
use rand::Rng;

use crate::diagram::{is_isomorphic, BoxNode, DotDiagram};
use crate::matrix::{Matrix, Model};
use crate::semiring::GaussianRational;
use crate::signature::{GeneratorDecl, Signature};
use crate::term::Term;
use crate::union_find::UnionFind;
use crate::Word;

/// Objects `A`, `B`; generators `f : A -> A` and `g : A -> B`.
pub fn hypergraph_signature() -> Signature {
    Signature::new(
        ["A", "B"],
        vec![
            GeneratorDecl::new("f", &["A"], &["A"]),
            GeneratorDecl::new("g", &["A"], &["B"]),
        ],
        false,
    )
    .expect("well-formed")
}

/// Objects `A`, `B`; a self-adjoint `s : A -> A` and `h : A -> B` with
/// adjoint `h_dag`.
pub fn dagger_signature() -> Signature {
    Signature::new(
        ["A", "B"],
        vec![
            GeneratorDecl::new("s", &["A"], &["A"]).with_dagger("s"),
            GeneratorDecl::new("h", &["A"], &["B"]).with_dagger("h_dag"),
            GeneratorDecl::new("h_dag", &["B"], &["A"]),
        ],
        true,
    )
    .expect("well-formed")
}

fn multisets(n: usize, k: usize) -> Vec<Vec<usize>> {
    // non-decreasing sequences of length k over 0..n
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(k);
    fn go(n: usize, k: usize, from: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for x in from..n {
            cur.push(x);
            go(n, k, x, cur, out);
            cur.pop();
        }
    }
    go(n, k, 0, &mut cur, &mut out);
    out
}

fn invariant(d: &DotDiagram) -> (Vec<String>, Vec<String>, Vec<(String, usize)>) {
    let mut labels: Vec<String> = d.boxes().iter().map(|b| b.label.clone()).collect();
    labels.sort();
    let mut dots = d.dots().to_vec();
    dots.sort();
    let mut degrees: Vec<(String, usize)> = d
        .dot_ports()
        .iter()
        .zip(d.dots())
        .map(|(p, a)| (a.clone(), p.incoming() * 16 + p.outgoing()))
        .collect();
    degrees.sort();
    (labels, dots, degrees)
}

/// Pushes `d` unless an isomorphic diagram is already present.
fn push_unique(out: &mut Vec<DotDiagram>, keys: &mut Vec<(Vec<String>, Vec<String>, Vec<(String, usize)>)>, d: DotDiagram) {
    let key = invariant(&d);
    for (k, e) in keys.iter().zip(out.iter()) {
        if *k == key && is_isomorphic(e, &d).is_some() {
            return;
        }
    }
    keys.push(key);
    out.push(d);
}

/// All simple closed diagrams with at most `max_boxes` boxes and `max_dots`
/// dots, one per isomorphism class.
pub fn enumerate_simple_closed(sig: &Signature, max_boxes: usize, max_dots: usize) -> Vec<DotDiagram> {
    let gens: Vec<&GeneratorDecl> = sig.generators().collect();
    let objects: Vec<String> = sig.objects().map(String::from).collect();
    let mut out = Vec::new();
    let mut keys = Vec::new();
    for nb in 0..=max_boxes {
        for labels in multisets(gens.len(), nb) {
            let ports: Vec<&String> = labels
                .iter()
                .flat_map(|&g| gens[g].dom.iter().chain(gens[g].cod.iter()))
                .collect();
            for nd in 0..=max_dots {
                for dot_objs in multisets(objects.len(), nd) {
                    let dots: Vec<String> = dot_objs.iter().map(|&o| objects[o].clone()).collect();
                    let choices: Vec<Vec<usize>> = ports
                        .iter()
                        .map(|&a| (0..nd).filter(|&d| dots[d] == *a).collect())
                        .collect();
                    if choices.iter().any(Vec::is_empty) {
                        continue;
                    }
                    let mut pick = vec![0; ports.len()];
                    loop {
                        let assigned: Vec<usize> = pick.iter().zip(&choices).map(|(&i, c)| c[i]).collect();
                        let mut touched = vec![false; nd];
                        for &d in &assigned {
                            touched[d] = true;
                        }
                        if touched.iter().all(|&t| t) {
                            let d = build(&gens, &labels, dots.clone(), &assigned);
                            push_unique(&mut out, &mut keys, d);
                        }
                        // odometer
                        let mut k = 0;
                        while k < pick.len() {
                            pick[k] += 1;
                            if pick[k] < choices[k].len() {
                                break;
                            }
                            pick[k] = 0;
                            k += 1;
                        }
                        if k == pick.len() {
                            break;
                        }
                    }
                }
            }
        }
    }
    out
}

fn build(gens: &[&GeneratorDecl], labels: &[usize], dots: Vec<String>, assigned: &[usize]) -> DotDiagram {
    let mut at = 0;
    let mut boxes = Vec::with_capacity(labels.len());
    for &g in labels {
        let (m, n) = (gens[g].dom.len(), gens[g].cod.len());
        boxes.push(BoxNode::new(
            &gens[g].name,
            assigned[at..at + m].to_vec(),
            assigned[at + m..at + m + n].to_vec(),
        ));
        at += m + n;
    }
    DotDiagram::new(boxes, dots, Vec::new(), Vec::new()).expect("dots in range")
}

/// A random simple closed diagram with at most `max_boxes` boxes and
/// `max_dots` dots.
pub fn random_simple_closed<R: Rng>(sig: &Signature, rng: &mut R, max_boxes: usize, max_dots: usize) -> DotDiagram {
    let gens: Vec<&GeneratorDecl> = sig.generators().collect();
    let objects: Vec<String> = sig.objects().map(String::from).collect();
    loop {
        let nb = rng.gen_range(1..=max_boxes);
        let labels: Vec<usize> = (0..nb).map(|_| rng.gen_range(0..gens.len())).collect();
        let nd = rng.gen_range(1..=max_dots);
        let dots: Vec<String> = (0..nd).map(|_| objects.choose(rng).expect("objects").clone()).collect();
        let mut assigned = Vec::new();
        let mut ok = true;
        for &g in &labels {
            for a in gens[g].dom.iter().chain(gens[g].cod.iter()) {
                let fits: Vec<usize> = (0..nd).filter(|&d| dots[d] == *a).collect();
                match fits.choose(rng) {
                    Some(&d) => assigned.push(d),
                    None => ok = false,
                }
            }
        }
        if !ok {
            continue;
        }
        let d = build(&gens, &labels, dots, &assigned);
        if d.is_simple() {
            return d;
        }
    }
}

/// An isomorphic copy of `d` with boxes and dots renumbered at random.
pub fn shuffle_diagram<R: Rng>(d: &DotDiagram, rng: &mut R) -> DotDiagram {
    let mut box_order: Vec<usize> = (0..d.num_boxes()).collect();
    box_order.shuffle(rng);
    let mut dot_of: Vec<usize> = (0..d.num_dots()).collect();
    dot_of.shuffle(rng);
    let mut dots = vec![String::new(); d.num_dots()];
    for (x, a) in d.dots().iter().enumerate() {
        dots[dot_of[x]] = a.clone();
    }
    let boxes = box_order
        .iter()
        .map(|&b| {
            let n = &d.boxes()[b];
            BoxNode {
                label: n.label.clone(),
                inputs: n.inputs.iter().map(|&x| dot_of[x]).collect(),
                outputs: n.outputs.iter().map(|&x| dot_of[x]).collect(),
            }
        })
        .collect();
    DotDiagram::new(
        boxes,
        dots,
        d.inputs().iter().map(|&x| dot_of[x]).collect(),
        d.outputs().iter().map(|&x| dot_of[x]).collect(),
    )
    .expect("renumbering is a bijection")
}

/// Whether the string diagram drawn by `t` is connected, counting every
/// generator occurrence and every boundary port as a node. Computed on the
/// term directly, without building a dot-diagram.
pub fn is_connected(t: &Term, sig: &Signature) -> bool {
    let Ok((dom, cod)) = t.typ(sig) else {
        return false;
    };
    let mut uf = UnionFind::new(0);
    let inputs: Vec<usize> = dom.iter().map(|_| uf.push()).collect();
    let outs = wire(t, sig, &mut uf, inputs);
    for h in outs.iter().take(cod.len()) {
        let port = uf.push();
        uf.union(port, *h);
    }
    let n = uf.len();
    n > 0 && (0..n).all(|x| uf.find(x) == uf.find(0))
}

fn wire(t: &Term, sig: &Signature, uf: &mut UnionFind, inputs: Vec<usize>) -> Vec<usize> {
    let node = |uf: &mut UnionFind, ins: &[usize], n: usize| -> Vec<usize> {
        let x = uf.push();
        for &i in ins {
            uf.union(x, i);
        }
        vec![x; n]
    };
    match t {
        Term::Id(_) => inputs,
        Term::Swap(..) => vec![inputs[1], inputs[0]],
        Term::Mu(_) | Term::Eps(_) | Term::Eta(_) | Term::Delta(_) | Term::Cap(_) | Term::Cup(_) => {
            let n = match t {
                Term::Mu(_) | Term::Eta(_) => 1,
                Term::Delta(_) | Term::Cap(_) => 2,
                _ => 0,
            };
            node(uf, &inputs, n)
        }
        Term::Gen(name) => {
            let n = sig.generator(name).map_or(0, |g| g.cod.len());
            node(uf, &inputs, n)
        }
        Term::Seq(a, b) => {
            let mid = wire(a, sig, uf, inputs);
            wire(b, sig, uf, mid)
        }
        Term::Par(a, b) => {
            let k = a.dom(sig).map_or(0, |w| w.len());
            let mut left = inputs;
            let right = left.split_off(k.min(left.len()));
            let mut out = wire(a, sig, uf, left);
            out.extend(wire(b, sig, uf, right));
            out
        }
        Term::Dag(a) => {
            let m = a.dom(sig).map_or(0, |w| w.len());
            let fresh: Vec<usize> = (0..m).map(|_| uf.push()).collect();
            let outs = wire(a, sig, uf, fresh.clone());
            for (o, i) in outs.iter().zip(&inputs) {
                uf.union(*o, *i);
            }
            fresh
        }
    }
}

fn layer(left: usize, gen: Term, right: usize, a: &str) -> Term {
    let mut parts = Vec::new();
    if left > 0 {
        parts.push(Term::Id(vec![a.to_string(); left]));
    }
    parts.push(gen);
    if right > 0 {
        parts.push(Term::Id(vec![a.to_string(); right]));
    }
    Term::par_all(parts).expect("non-empty")
}

/// A random connected term built from `μ, η, δ, ε` and symmetries on
/// object `a`, with between 1 and `max_gens` generators and at most
/// `max_arity` wires on either boundary.
pub fn random_scfa_term<R: Rng>(sig: &Signature, a: &str, rng: &mut R, max_gens: usize, max_arity: usize) -> Term {
    loop {
        let mut width = rng.gen_range(0..=max_arity);
        let mut layers = Vec::new();
        let target = rng.gen_range(1..=max_gens);
        for _ in 0..target {
            let mut options: Vec<u8> = Vec::new();
            if width >= 2 {
                options.extend([0, 4]);
            }
            if width >= 1 {
                options.extend([2, 3]);
            }
            if width <= max_arity {
                options.push(1);
                if width >= 1 {
                    options.push(2);
                }
            }
            let op = *options.choose(rng).expect("some option");
            let (consumed, produced, gen) = match op {
                0 => (2, 1, Term::Mu(a.into())),
                1 => (0, 1, Term::Eta(a.into())),
                2 => (1, 2, Term::Delta(a.into())),
                3 => (1, 0, Term::Eps(a.into())),
                _ => (2, 2, Term::Swap(a.into(), a.into())),
            };
            let left = rng.gen_range(0..=width - consumed);
            layers.push(layer(left, gen, width - consumed - left, a));
            width = width + produced - consumed;
        }
        if width > max_arity {
            continue;
        }
        let t = Term::seq_all(layers).expect("at least one layer");
        if is_connected(&t, sig) {
            return t;
        }
    }
}

/// Size and shape limits for [`random_term`].
#[derive(Debug, Clone, Copy)]
pub struct TermShape {
    pub max_depth: usize,
    pub max_width: usize,
    /// Whether `^` may appear on terms containing boxes.
    pub dagger_boxes: bool,
}

impl Default for TermShape {
    fn default() -> Self {
        TermShape {
            max_depth: 4,
            max_width: 3,
            dagger_boxes: false,
        }
    }
}

/// A random well-typed term over `sig` with a random domain.
pub fn random_term<R: Rng>(sig: &Signature, rng: &mut R, shape: TermShape) -> Term {
    let objects: Vec<String> = sig.objects().map(String::from).collect();
    let n = rng.gen_range(0..=shape.max_width.min(2));
    let dom: Word = (0..n).map(|_| objects.choose(rng).expect("objects").clone()).collect();
    random_term_from(sig, rng, &dom, shape.max_depth, shape).0
}

/// A random well-typed term with domain `dom`, and its codomain.
pub fn random_term_from<R: Rng>(sig: &Signature, rng: &mut R, dom: &[String], depth: usize, shape: TermShape) -> (Term, Word) {
    let fallback = || (Term::Id(dom.to_vec()), dom.to_vec());
    if depth == 0 {
        return atom(sig, rng, dom, shape).unwrap_or_else(fallback);
    }
    match rng.gen_range(0..10) {
        0..=2 => {
            let (t1, c1) = random_term_from(sig, rng, dom, depth - 1, shape);
            let (t2, c2) = random_term_from(sig, rng, &c1, depth - 1, shape);
            (t1.then(t2), c2)
        }
        3..=5 => {
            let k = rng.gen_range(0..=dom.len());
            let (t1, mut c1) = random_term_from(sig, rng, &dom[..k], depth - 1, shape);
            let (t2, c2) = random_term_from(sig, rng, &dom[k..], depth - 1, shape);
            if c1.len() + c2.len() > shape.max_width {
                return fallback();
            }
            c1.extend(c2);
            (t1.par(t2), c1)
        }
        6 => {
            // the dagger of something landing on `dom`
            let candidates = atoms(sig, dom, shape, true);
            match candidates.choose(rng) {
                Some((t, c)) => (t.clone().dag(), c.clone()),
                None => fallback(),
            }
        }
        _ => atom(sig, rng, dom, shape).unwrap_or_else(fallback),
    }
}

fn atom<R: Rng>(sig: &Signature, rng: &mut R, dom: &[String], shape: TermShape) -> Option<(Term, Word)> {
    atoms(sig, dom, shape, false).choose(rng).cloned()
}

/// Constants and generators with domain `dom` (or, if `reversed`, with
/// codomain `dom`, paired with their domain), within the width limit.
fn atoms(sig: &Signature, dom: &[String], shape: TermShape, reversed: bool) -> Vec<(Term, Word)> {
    let mut all: Vec<(Term, Word, Word)> = Vec::new();
    let w = |xs: &[&String]| -> Word { xs.iter().map(|s| (*s).clone()).collect() };
    for a in sig.objects().map(String::from) {
        let a1 = w(&[&a]);
        let a2 = w(&[&a, &a]);
        all.push((Term::Mu(a.clone()), a2.clone(), a1.clone()));
        all.push((Term::Eta(a.clone()), Vec::new(), a1.clone()));
        all.push((Term::Delta(a.clone()), a1.clone(), a2.clone()));
        all.push((Term::Eps(a.clone()), a1.clone(), Vec::new()));
        all.push((Term::Cap(a.clone()), Vec::new(), a2.clone()));
        all.push((Term::Cup(a.clone()), a2.clone(), Vec::new()));
        for b in sig.objects().map(String::from) {
            all.push((Term::Swap(a.clone(), b.clone()), w(&[&a, &b]), w(&[&b, &a])));
        }
    }
    for g in sig.generators() {
        if !reversed || (shape.dagger_boxes && sig.dagger_name(&g.name).is_some()) {
            all.push((Term::Gen(g.name.clone()), g.dom.clone(), g.cod.clone()));
        }
    }
    if !reversed {
        all.push((Term::Id(dom.to_vec()), dom.to_vec(), dom.to_vec()));
    }
    all.into_iter()
        .filter_map(|(t, d, c)| {
            let (from, to) = if reversed { (c, d) } else { (d, c) };
            (from == dom && to.len() <= shape.max_width).then_some((t, to))
        })
        .collect()
}

/// Random integer model: index sets of size `1..=max_size`, entries in
/// `-spread..=spread`.
pub fn random_int_model<R: Rng>(sig: &Signature, rng: &mut R, max_size: usize, spread: i64) -> Model<BigInt> {
    let sizes: Vec<(String, usize)> = sig.objects().map(|a| (a.to_string(), rng.gen_range(1..=max_size))).collect();
    let mut entries = Vec::new();
    let model = Model::from_fn(
        sig,
        |a| sizes.iter().find(|(b, _)| b == a).map_or(1, |p| p.1),
        |_, _, _| BigInt::from(0),
    );
    for (name, m) in model.generators() {
        let fresh: Vec<BigInt> = (0..m.data().len()).map(|_| BigInt::from(rng.gen_range(-spread..=spread))).collect();
        entries.push((name.clone(), Matrix::from_data(m.row_legs().to_vec(), m.col_legs().to_vec(), fresh).expect("sizes match")));
    }
    entries.into_iter().fold(model, |acc, (n, m)| acc.with_generator(&n, m))
}

/// Random dagger-compatible model over Gaussian integers: each dagger pair
/// gets a matrix and its conjugate transpose, each self-adjoint generator a
/// Hermitian matrix.
pub fn random_dagger_model<R: Rng>(sig: &Signature, rng: &mut R, max_size: usize, spread: i64) -> Model<GaussianRational> {
    let sizes: Vec<(String, usize)> = sig.objects().map(|a| (a.to_string(), rng.gen_range(1..=max_size))).collect();
    let mut model: Model<GaussianRational> = Model::from_fn(
        sig,
        |a| sizes.iter().find(|(b, _)| b == a).map_or(1, |p| p.1),
        |_, _, _| GaussianRational::from_ints(0, 0),
    );
    let names: Vec<String> = model.generators().keys().cloned().collect();
    let mut done: Vec<String> = Vec::new();
    for name in names {
        if done.contains(&name) {
            continue;
        }
        let m = model.generator(&name).expect("present");
        let data: Vec<GaussianRational> = (0..m.data().len())
            .map(|_| GaussianRational::from_ints(rng.gen_range(-spread..=spread), rng.gen_range(-spread..=spread)))
            .collect();
        let mut m = Matrix::from_data(m.row_legs().to_vec(), m.col_legs().to_vec(), data).expect("sizes match");
        let partner = sig.dagger_name(&name).map(String::from);
        if partner.as_deref() == Some(name.as_str()) {
            m = m.plus(&m.dagger()).expect("square");
        }
        if let Some(p) = partner {
            model.set_generator(&p, m.dagger());
            done.push(p);
        }
        model.set_generator(&name, m);
        done.push(name);
    }
    model
}
