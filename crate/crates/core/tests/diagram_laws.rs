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

use hypercat_core::corpus::{
    dagger_signature, enumerate_simple_closed, hypergraph_signature, random_simple_closed, random_term,
    random_term_from, shuffle_diagram, TermShape,
};
use hypercat_core::diagram::{enumerate_homs, is_hom, is_isomorphic, Hom, HomConstraint};
use hypercat_core::{DotDiagram, Signature, Term};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn iso(a: &DotDiagram, b: &DotDiagram) -> bool {
    is_isomorphic(a, b).is_some()
}

fn el(t: &Term, sig: &Signature) -> DotDiagram {
    t.to_diagram(sig).unwrap()
}

/// Three composable random terms.
fn chain(sig: &Signature, seed: u64, shape: TermShape) -> (Term, Term, Term) {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let a = random_term(sig, &mut rng, shape);
    let (_, c) = a.typ(sig).unwrap();
    let (b, c) = random_term_from(sig, &mut rng, &c, 2, shape);
    let (c, _) = random_term_from(sig, &mut rng, &c, 2, shape);
    (a, b, c)
}

fn small() -> TermShape {
    TermShape {
        max_depth: 3,
        max_width: 3,
        dagger_boxes: false,
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn composition_is_associative(seed in any::<u64>()) {
        let sig = hypergraph_signature();
        let (a, b, c) = chain(&sig, seed, small());
        let (a, b, c) = (el(&a, &sig), el(&b, &sig), el(&c, &sig));
        let left = a.compose(&b).unwrap().compose(&c).unwrap();
        let right = a.compose(&b.compose(&c).unwrap()).unwrap();
        prop_assert!(iso(&left, &right));
    }

    #[test]
    fn identities_are_units(seed in any::<u64>()) {
        let sig = hypergraph_signature();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let d = el(&random_term(&sig, &mut rng, small()), &sig);
        let before = DotDiagram::identity(&d.dom()).compose(&d).unwrap();
        let after = d.compose(&DotDiagram::identity(&d.cod())).unwrap();
        prop_assert!(iso(&before, &d));
        prop_assert!(iso(&after, &d));
    }

    #[test]
    fn interchange_law(seed in any::<u64>()) {
        let sig = hypergraph_signature();
        let (a, b, _) = chain(&sig, seed, small());
        let (c, d, _) = chain(&sig, seed.wrapping_add(1), small());
        let (a, b, c, d) = (el(&a, &sig), el(&b, &sig), el(&c, &sig), el(&d, &sig));
        let left = a.compose(&b).unwrap().tensor(&c.compose(&d).unwrap());
        let right = a.tensor(&c).compose(&b.tensor(&d)).unwrap();
        prop_assert!(iso(&left, &right));
    }

    #[test]
    fn tensor_is_associative_with_unit(seed in any::<u64>()) {
        let sig = hypergraph_signature();
        let (a, b, c) = chain(&sig, seed, small());
        let (a, b, c) = (el(&a, &sig), el(&b, &sig), el(&c, &sig));
        prop_assert!(iso(&a.tensor(&b).tensor(&c), &a.tensor(&b.tensor(&c))));
        prop_assert!(iso(&a.tensor(&DotDiagram::empty()), &a));
    }

    #[test]
    fn dagger_is_an_involutive_contravariant_functor(seed in any::<u64>()) {
        let sig = dagger_signature();
        let shape = TermShape { dagger_boxes: true, ..small() };
        let (a, b, _) = chain(&sig, seed, shape);
        let (a, b) = (el(&a, &sig), el(&b, &sig));
        prop_assert_eq!(&a.dagger(&sig).unwrap().dagger(&sig).unwrap(), &a);
        let left = a.compose(&b).unwrap().dagger(&sig).unwrap();
        let right = b.dagger(&sig).unwrap().compose(&a.dagger(&sig).unwrap()).unwrap();
        prop_assert!(iso(&left, &right));
        let t = a.tensor(&b).dagger(&sig).unwrap();
        prop_assert!(iso(&t, &a.dagger(&sig).unwrap().tensor(&b.dagger(&sig).unwrap())));
    }

    #[test]
    fn isomorphism_ignores_numbering(seed in any::<u64>()) {
        let sig = hypergraph_signature();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let d = el(&random_term(&sig, &mut rng, small()), &sig);
        let s = shuffle_diagram(&d, &mut rng);
        let h = is_isomorphic(&d, &s).expect("shuffled copy is isomorphic");
        prop_assert!(is_hom(&d, &s, &h));
        prop_assert!(iso(&d.canonical(), &d));
    }

    #[test]
    fn surjective_on_boxes_implies_surjective_on_dots(seed in any::<u64>()) {
        let sig = hypergraph_signature();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let g = random_simple_closed(&sig, &mut rng, 4, 3);
        let f = random_simple_closed(&sig, &mut rng, 3, 3);
        for h in enumerate_homs(&g, &f, HomConstraint::Any) {
            if h.is_box_surjective(&f) {
                prop_assert!(h.is_dot_surjective(&f));
            }
        }
    }
}

#[test]
fn corpus_homs_compose() {
    let sig = hypergraph_signature();
    let all = enumerate_simple_closed(&sig, 2, 2);
    for a in &all {
        for b in &all {
            for h in enumerate_homs(a, b, HomConstraint::Any) {
                assert!(is_hom(a, b, &h));
                for c in &all {
                    for k in enumerate_homs(b, c, HomConstraint::Any) {
                        let composite = Hom {
                            box_map: h.box_map.iter().map(|&x| k.box_map[x]).collect(),
                            dot_map: h.dot_map.iter().map(|&x| k.dot_map[x]).collect(),
                        };
                        assert!(is_hom(a, c, &composite));
                    }
                }
            }
        }
    }
}

#[test]
fn automorphisms_form_a_group() {
    let sig = hypergraph_signature();
    for d in enumerate_simple_closed(&sig, 3, 3) {
        let auts = enumerate_homs(&d, &d, HomConstraint::Iso);
        assert!(auts.contains(&Hom::identity(&d)));
        for a in &auts {
            for b in &auts {
                let ab = Hom {
                    box_map: a.box_map.iter().map(|&x| b.box_map[x]).collect(),
                    dot_map: a.dot_map.iter().map(|&x| b.dot_map[x]).collect(),
                };
                assert!(auts.contains(&ab));
            }
        }
    }
}
