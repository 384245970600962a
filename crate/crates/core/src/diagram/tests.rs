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

use super::*;
use crate::signature::GeneratorDecl;

fn sig() -> Signature {
    Signature::new(
        ["A", "B"],
        vec![
            GeneratorDecl::new("f", &["A"], &["A"]),
            GeneratorDecl::new("g", &["A"], &["B"]),
            GeneratorDecl::new("p", &[], &["A"]),
            GeneratorDecl::new("q", &["A"], &[]),
        ],
        false,
    )
    .unwrap()
}

fn a() -> String {
    "A".to_string()
}

fn gen(kind: GeneratorKind) -> DotDiagram {
    DotDiagram::generator(&kind, &sig()).unwrap()
}

fn iso(f: &DotDiagram, g: &DotDiagram) -> bool {
    is_isomorphic(f, g).is_some()
}

/// `η ; δ ; (f ⊗ 1) ; μ ; ε`: box `f` looping on a single dot.
fn loop_on(label: &str) -> DotDiagram {
    let s = sig();
    let eta = gen(GeneratorKind::Eta(a()));
    let delta = gen(GeneratorKind::Delta(a()));
    let body = DotDiagram::generator(&GeneratorKind::Box(label.to_string()), &s)
        .unwrap()
        .tensor(&gen(GeneratorKind::Identity(a())));
    let mu = gen(GeneratorKind::Mu(a()));
    let eps = gen(GeneratorKind::Epsilon(a()));
    eta.compose(&delta)
        .and_then(|x| x.compose(&body))
        .and_then(|x| x.compose(&mu))
        .and_then(|x| x.compose(&eps))
        .unwrap()
}

#[test]
fn mu_is_one_dot_two_inputs_one_output() {
    let mu = gen(GeneratorKind::Mu(a()));
    assert_eq!(mu.num_dots(), 1);
    assert_eq!(mu.num_boxes(), 0);
    assert_eq!(mu.inputs(), &[0, 0]);
    assert_eq!(mu.outputs(), &[0]);
}

#[test]
fn identity_and_swap_shapes() {
    let id = gen(GeneratorKind::Identity(a()));
    assert_eq!((id.num_dots(), id.inputs().len(), id.outputs().len()), (1, 1, 1));
    let sw = gen(GeneratorKind::Swap(a(), "B".into()));
    assert_eq!(sw.dots(), &["A".to_string(), "B".to_string()]);
    assert_eq!(sw.inputs(), &[0, 1]);
    assert_eq!(sw.outputs(), &[1, 0]);
    assert_eq!(sw.dom(), vec!["A".to_string(), "B".to_string()]);
    assert_eq!(sw.cod(), vec!["B".to_string(), "A".to_string()]);
}

#[test]
fn box_generator_gets_fresh_dot_per_port() {
    let g = gen(GeneratorKind::Box("g".into()));
    assert_eq!(g.num_dots(), 2);
    assert_eq!(g.boxes()[0].inputs, vec![0]);
    assert_eq!(g.boxes()[0].outputs, vec![1]);
    assert!(g.validate(&sig()).is_ok());
}

#[test]
fn unknown_names_rejected() {
    let s = sig();
    assert!(matches!(
        DotDiagram::generator(&GeneratorKind::Box("nope".into()), &s),
        Err(DiagramError::UnknownGenerator(_))
    ));
    assert!(matches!(
        DotDiagram::generator(&GeneratorKind::Mu("Z".into()), &s),
        Err(DiagramError::UnknownObject(_))
    ));
}

#[test]
fn delta_then_mu_is_identity() {
    let d = gen(GeneratorKind::Delta(a())).compose(&gen(GeneratorKind::Mu(a()))).unwrap();
    assert_eq!(d.num_dots(), 1);
    assert!(iso(&d, &gen(GeneratorKind::Identity(a()))));
}

#[test]
fn identity_is_unit_for_compose() {
    let g = gen(GeneratorKind::Box("g".into()));
    let left = gen(GeneratorKind::Identity(a())).compose(&g).unwrap();
    let right = g.compose(&gen(GeneratorKind::Identity("B".into()))).unwrap();
    assert!(iso(&left, &g));
    assert!(iso(&right, &g));
}

#[test]
fn state_then_effect_shares_one_dot() {
    let d = gen(GeneratorKind::Box("p".into())).compose(&gen(GeneratorKind::Box("q".into()))).unwrap();
    assert_eq!(d.num_boxes(), 2);
    assert_eq!(d.num_dots(), 1);
    assert!(d.is_closed());
    assert_eq!(d.boxes()[0].outputs, d.boxes()[1].inputs);
}

#[test]
fn compose_type_mismatch() {
    let err = gen(GeneratorKind::Box("g".into())).compose(&gen(GeneratorKind::Box("f".into())));
    assert!(matches!(err, Err(DiagramError::TypeMismatch { .. })));
}

#[test]
fn compose_along_empty_word_is_disjoint_union() {
    let p = gen(GeneratorKind::Box("p".into()));
    let q = gen(GeneratorKind::Box("q".into()));
    let closed = p.compose(&q).unwrap();
    let both = closed.compose(&closed).unwrap();
    assert_eq!(both.num_dots(), 2);
    assert!(iso(&both, &closed.tensor(&closed)));
}

#[test]
fn tensor_unit_and_counts() {
    let g = gen(GeneratorKind::Box("g".into()));
    assert!(iso(&g.tensor(&DotDiagram::empty()), &g));
    assert!(iso(&DotDiagram::empty().tensor(&g), &g));
    let ids = gen(GeneratorKind::Identity(a())).tensor(&gen(GeneratorKind::Identity("B".into())));
    assert_eq!((ids.num_dots(), ids.inputs().len(), ids.outputs().len()), (2, 2, 2));
    let f = gen(GeneratorKind::Box("f".into()));
    assert_eq!(f.tensor(&g).num_dots(), f.num_dots() + g.num_dots());
}

#[test]
fn swap_twice_is_identity() {
    let sw = gen(GeneratorKind::Swap(a(), "B".into()));
    let back = gen(GeneratorKind::Swap("B".into(), a()));
    let ids = gen(GeneratorKind::Identity(a())).tensor(&gen(GeneratorKind::Identity("B".into())));
    assert!(iso(&sw.compose(&back).unwrap(), &ids));
}

fn dagger_sig() -> Signature {
    Signature::new(
        ["A", "B"],
        vec![
            GeneratorDecl::new("f", &["A"], &["B"]),
            GeneratorDecl::new("f_dag", &["B"], &["A"]).with_dagger("f"),
        ],
        true,
    )
    .unwrap()
}

#[test]
fn dagger_flips_box_and_boundary() {
    let s = dagger_sig();
    let f = DotDiagram::generator(&GeneratorKind::Box("f".into()), &s).unwrap();
    let fd = f.dagger(&s).unwrap();
    assert_eq!(fd.boxes()[0].label, "f_dag");
    assert_eq!(fd.dom(), f.cod());
    assert_eq!(fd.cod(), f.dom());
    assert!(fd.validate(&s).is_ok());
    assert!(iso(&fd, &DotDiagram::generator(&GeneratorKind::Box("f_dag".into()), &s).unwrap()));
    assert!(iso(&fd.dagger(&s).unwrap(), &f));
}

#[test]
fn dagger_of_mu_is_delta() {
    let s = dagger_sig();
    let mu = DotDiagram::generator(&GeneratorKind::Mu(a()), &s).unwrap();
    let delta = DotDiagram::generator(&GeneratorKind::Delta(a()), &s).unwrap();
    assert!(iso(&mu.dagger(&s).unwrap(), &delta));
}

#[test]
fn dagger_without_partner_fails() {
    let f = gen(GeneratorKind::Box("f".into()));
    assert!(matches!(f.dagger(&sig()), Err(DiagramError::NoDagger(_))));
}

#[test]
fn classify_examples() {
    let mu = gen(GeneratorKind::Mu(a()));
    assert_eq!(mu.classify(), Classification { simple: true, closed: false });

    let closed_path = gen(GeneratorKind::Eta(a()))
        .compose(&gen(GeneratorKind::Box("f".into())))
        .and_then(|x| x.compose(&gen(GeneratorKind::Epsilon(a()))))
        .unwrap();
    assert_eq!(closed_path.classify(), Classification { simple: true, closed: true });

    let free = gen(GeneratorKind::Eta(a())).compose(&gen(GeneratorKind::Epsilon(a()))).unwrap();
    assert_eq!(free.num_dots(), 1);
    assert_eq!(free.classify(), Classification { simple: false, closed: true });
}

#[test]
fn split_free_dots_examples() {
    let p = gen(GeneratorKind::Box("p".into()));
    let q = gen(GeneratorKind::Box("q".into()));
    let two_boxes = p.tensor(&q); // open: p's output and q's input on the boundary
    assert!(matches!(two_boxes.split_free_dots(), Err(DiagramError::NotClosed)));

    // p ⊗ q closed off on separate dots, plus one free A dot.
    let closed = p
        .compose(&gen(GeneratorKind::Epsilon(a())))
        .unwrap()
        .tensor(&gen(GeneratorKind::Eta(a())).compose(&q).unwrap());
    let mut counts = BTreeMap::new();
    counts.insert(a(), 1);
    let with_free = closed.tensor(&DotDiagram::free_dots(&counts));
    assert_eq!((with_free.num_boxes(), with_free.num_dots()), (2, 3));
    let (simple, free) = with_free.split_free_dots().unwrap();
    assert_eq!((simple.num_boxes(), simple.num_dots()), (2, 2));
    assert_eq!(free, counts);
    assert!(iso(&simple.tensor(&DotDiagram::free_dots(&free)), &with_free));

    let (same, none) = closed.split_free_dots().unwrap();
    assert!(none.is_empty());
    assert!(iso(&same, &closed));

    let mut abb = BTreeMap::new();
    abb.insert(a(), 2);
    abb.insert("B".to_string(), 1);
    let (empty, counted) = DotDiagram::free_dots(&abb).split_free_dots().unwrap();
    assert_eq!(empty, DotDiagram::empty());
    assert_eq!(counted, abb);
}

#[test]
fn two_disjoint_loops_have_two_box_bijections() {
    let f = loop_on("f").tensor(&loop_on("f"));
    let homs = enumerate_homs(&f, &f, HomConstraint::BoxBijective);
    assert_eq!(homs.len(), 2);
    assert!(homs.iter().all(|h| is_hom(&f, &f, h)));
    let isos = enumerate_homs(&f, &f, HomConstraint::Iso);
    assert!(isos.contains(&Hom::identity(&f)));
}

#[test]
fn bijective_on_boxes_but_not_on_dots() {
    // two `q` boxes on separate dots vs. two `q` boxes sharing one dot
    let q = gen(GeneratorKind::Box("q".into()));
    let eta = gen(GeneratorKind::Eta(a()));
    let apart = eta.compose(&q).unwrap().tensor(&eta.compose(&q).unwrap());
    let shared = eta
        .compose(&gen(GeneratorKind::Delta(a())))
        .and_then(|x| x.compose(&q.tensor(&q)))
        .unwrap();
    assert_eq!((apart.num_dots(), shared.num_dots()), (2, 1));
    let homs = enumerate_homs(&apart, &shared, HomConstraint::BoxBijective);
    assert_eq!(homs.len(), 2);
    for h in &homs {
        assert!(h.is_box_surjective(&shared));
        assert!(h.is_dot_surjective(&shared));
        assert_eq!(h.dot_map, vec![0, 0]);
    }
    assert_eq!(count_homs(&shared, &apart, HomConstraint::BoxBijective), 0);
    // both boxes folded onto one box of `apart`
    assert_eq!(count_homs(&shared, &apart, HomConstraint::Any), 2);
    assert!(!iso(&apart, &shared));
}

#[test]
fn any_homs_include_non_injective_box_maps() {
    // a loop on f folds onto itself; two loops fold onto one
    let one = loop_on("f");
    let two = one.tensor(&one);
    assert_eq!(count_homs(&two, &one, HomConstraint::Any), 1);
    assert_eq!(count_homs(&two, &one, HomConstraint::BoxBijective), 0);
    assert_eq!(count_homs(&one, &two, HomConstraint::Any), 2);
}

#[test]
fn free_dots_map_anywhere_with_matching_label() {
    let mut counts = BTreeMap::new();
    counts.insert(a(), 1);
    let one = DotDiagram::free_dots(&counts);
    counts.insert(a(), 3);
    let three = DotDiagram::free_dots(&counts);
    assert_eq!(count_homs(&one, &three, HomConstraint::Any), 3);
    assert_eq!(count_homs(&three, &three, HomConstraint::Iso), 6);
    assert_eq!(count_homs(&three, &one, HomConstraint::Iso), 0);
}

#[test]
fn renamed_representatives_are_isomorphic() {
    let g = gen(GeneratorKind::Box("g".into()));
    let shuffled = DotDiagram::new(
        vec![BoxNode::new("g", vec![1], vec![0])],
        vec!["B".into(), "A".into()],
        vec![1],
        vec![0],
    )
    .unwrap();
    let h = is_isomorphic(&g, &shuffled).unwrap();
    assert_eq!(h.dot_map, vec![1, 0]);
    assert!(is_hom(&g, &shuffled, &h));
    assert!(iso(&g, &g));
    assert_eq!(g.canonical(), shuffled.canonical());
}

#[test]
fn boundary_order_matters() {
    let sw = gen(GeneratorKind::Swap(a(), a()));
    let ids = gen(GeneratorKind::Identity(a())).tensor(&gen(GeneratorKind::Identity(a())));
    assert!(!iso(&sw, &ids));
    assert!(MorphismClass::new(sw.clone()) != MorphismClass::new(ids));
    assert!(MorphismClass::new(sw.clone()) == MorphismClass::new(sw.canonical()));
}

#[test]
fn out_of_range_dots_rejected() {
    assert!(matches!(
        DotDiagram::new(vec![], vec![], vec![0], vec![]),
        Err(DiagramError::DotOutOfRange(0))
    ));
}

#[test]
fn validate_reports_port_type_errors() {
    let bad = DotDiagram::new(vec![BoxNode::new("g", vec![0], vec![0])], vec!["A".into()], vec![], vec![]).unwrap();
    assert!(matches!(bad.validate(&sig()), Err(DiagramError::PortType { .. })));
    let bad = DotDiagram::new(vec![BoxNode::new("g", vec![], vec![0])], vec!["B".into()], vec![], vec![]).unwrap();
    assert!(matches!(bad.validate(&sig()), Err(DiagramError::ArityMismatch { .. })));
}
