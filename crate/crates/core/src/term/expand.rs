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

//! Reading a dot-diagram back as a term: every dot becomes a canonical
//! spider, boxes sit in one parallel layer, and box outputs are fed back to
//! their dots with cups.

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use super::Term;
use crate::diagram::DotDiagram;
use crate::Word;

fn seq(a: Term, b: Term) -> Term {
    match (a, b) {
        (Term::Id(_), b) => b,
        (a, Term::Id(_)) => a,
        (a, Term::Seq(b1, b2)) => seq(seq(a, *b1), *b2),
        (a, b) => a.then(b),
    }
}

fn par(a: Term, b: Term) -> Term {
    match (a, b) {
        (Term::Id(mut v), Term::Id(w)) => {
            v.extend(w);
            Term::Id(v)
        }
        (Term::Id(v), b) if v.is_empty() => b,
        (a, Term::Id(w)) if w.is_empty() => a,
        (a, b) => a.par(b),
    }
}

fn ids(n: usize, a: &str) -> Term {
    Term::Id(vec![String::from(a); n])
}

/// `μ`-tree `A^m -> A`, leaning left.
fn tree(m: usize, a: &str) -> Term {
    match m {
        0 => Term::Eta(a.into()),
        _ => (2..=m).fold(ids(1, a), |acc, k| {
            seq(acc, par(Term::Mu(a.into()), ids(m - k, a)))
        }),
    }
}

/// `δ`-cotree `A -> A^n`, the mirror image of [`tree`].
fn cotree(n: usize, a: &str) -> Term {
    match n {
        0 => Term::Eps(a.into()),
        _ => (2..=n).rev().fold(ids(1, a), |acc, k| {
            seq(acc, par(Term::Delta(a.into()), ids(n - k, a)))
        }),
    }
}

/// Canonical spider `S_m^n` on object `a`.
pub fn spider_term(m: usize, n: usize, a: &str) -> Term {
    if m == 0 && n == 0 {
        return Term::Eta(a.into()).then(Term::Eps(a.into()));
    }
    seq(tree(m, a), cotree(n, a))
}

/// Permutation of the wires of `word`: output position `k` carries input
/// wire `perm[k]`. Built from adjacent swaps.
pub fn permutation_term(word: &[String], perm: &[usize]) -> Term {
    let n = word.len();
    debug_assert_eq!(perm.len(), n);
    let mut rank = vec![0; n];
    for (k, &i) in perm.iter().enumerate() {
        rank[i] = k;
    }
    // cur[p] = input wire currently at position p
    let mut cur: Vec<usize> = (0..n).collect();
    let mut out = Term::Id(word.to_vec());
    loop {
        let Some(j) = (0..n.saturating_sub(1)).find(|&j| rank[cur[j]] > rank[cur[j + 1]]) else {
            break;
        };
        let here: Word = cur.iter().map(|&i| word[i].clone()).collect();
        let layer = par(
            par(
                Term::Id(here[..j].to_vec()),
                Term::Swap(here[j].clone(), here[j + 1].clone()),
            ),
            Term::Id(here[j + 2..].to_vec()),
        );
        out = seq(out, layer);
        cur.swap(j, j + 1);
    }
    out
}

/// A term whose elaboration is isomorphic to `d`.
pub fn expand(d: &DotDiagram) -> Term {
    let dots = d.dots();
    let boxes = d.boxes();
    let obj_of = |ds: &[usize]| -> Word { ds.iter().map(|&x| dots[x].clone()).collect() };

    let v_word: Word = boxes.iter().flat_map(|b| obj_of(&b.inputs)).collect();
    let u_word: Word = boxes.iter().flat_map(|b| obj_of(&b.outputs)).collect();
    let y_word = d.cod();
    let (nv, ny, nu) = (v_word.len(), y_word.len(), u_word.len());

    // stage 1: dom -> V ⊗ Y ⊗ U'
    let mut grouped: Vec<usize> = (0..d.inputs().len()).collect();
    grouped.sort_by_key(|&k| (d.inputs()[k], k));
    let gather = permutation_term(&d.dom(), &grouped);

    let mut legs: Vec<Vec<usize>> = vec![Vec::new(); dots.len()];
    let mut in_degree = vec![0; dots.len()];
    for &x in d.inputs() {
        in_degree[x] += 1;
    }
    let (mut off_v, mut off_u) = (0, 0);
    for b in boxes {
        for (i, &x) in b.inputs.iter().enumerate() {
            legs[x].push(off_v + i);
        }
        for (j, &x) in b.outputs.iter().enumerate() {
            legs[x].push(nv + ny + off_u + j);
        }
        off_v += b.inputs.len();
        off_u += b.outputs.len();
    }
    for (k, &x) in d.outputs().iter().enumerate() {
        legs[x].push(nv + k);
    }
    let mut spiders = Term::Id(Vec::new());
    let mut targets = Vec::new();
    let mut spider_cod = Word::new();
    for (x, a) in dots.iter().enumerate() {
        legs[x].sort_unstable();
        spiders = par(spiders, spider_term(in_degree[x], legs[x].len(), a));
        targets.extend_from_slice(&legs[x]);
        spider_cod.extend(core::iter::repeat(a.clone()).take(legs[x].len()));
    }
    let mut scatter = vec![0; targets.len()];
    for (p, &t) in targets.iter().enumerate() {
        scatter[t] = p;
    }
    let stage1 = seq(seq(gather, spiders), permutation_term(&spider_cod, &scatter));

    // stage 2: V ⊗ Y ⊗ U' -> U ⊗ Y ⊗ U'
    let mut layer = Term::Id(Vec::new());
    for b in boxes {
        layer = par(layer, Term::Gen(b.label.clone()));
    }
    let mut rest = y_word.clone();
    rest.extend(u_word.iter().cloned());
    let stage2 = par(layer, Term::Id(rest));

    // stage 3: U ⊗ Y ⊗ U' -> Y
    let mut mid = u_word.clone();
    mid.extend(y_word.iter().cloned());
    mid.extend(u_word.iter().cloned());
    let mut order: Vec<usize> = (nu..nu + ny).collect();
    for k in 0..nu {
        order.push(k);
        order.push(nu + ny + k);
    }
    let mut cups = Term::Id(y_word);
    for a in &u_word {
        cups = par(cups, Term::Cup(a.clone()));
    }
    let stage3 = seq(permutation_term(&mid, &order), cups);

    seq(seq(stage1, stage2), stage3)
}
