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

use alloc::string::ToString;
use alloc::vec;

use super::*;
use crate::diagram::is_isomorphic;
use crate::signature::GeneratorDecl;

fn sig() -> Signature {
    Signature::new(
        ["A", "B", "C", "D"],
        vec![
            GeneratorDecl::new("f", &["A"], &["B"]),
            GeneratorDecl::new("g", &["C"], &["D"]),
            GeneratorDecl::new("h", &["B"], &[]),
            GeneratorDecl::new("k", &["A", "A"], &["A"]),
        ],
        false,
    )
    .unwrap()
}

fn w(xs: &[&str]) -> Word {
    xs.iter().map(|s| s.to_string()).collect()
}

fn iso(a: &DotDiagram, b: &DotDiagram) -> bool {
    is_isomorphic(a, b).is_some()
}

fn el(text: &str) -> DotDiagram {
    let s = sig();
    parse(text, &s).unwrap().to_diagram(&s).unwrap()
}

#[test]
fn mu_then_delta() {
    let t = parse("mu[A] ; delta[A]", &sig()).unwrap();
    assert_eq!(t, Term::Mu("A".into()).then(Term::Delta("A".into())));
    assert_eq!(t.typ(&sig()).unwrap(), (w(&["A", "A"]), w(&["A", "A"])));
}

#[test]
fn tensor_types() {
    let t = parse("f * g", &sig()).unwrap();
    assert_eq!(t.typ(&sig()).unwrap(), (w(&["A", "C"]), w(&["B", "D"])));
}

#[test]
fn type_error_names_both_words() {
    let e = parse("eta[A] ; h", &sig()).unwrap_err();
    assert_eq!(
        e,
        TermError::TypeMismatch {
            cod: w(&["A"]),
            dom: w(&["B"])
        }
    );
}

#[test]
fn syntax_errors_carry_positions() {
    match parse_untyped("f ; ; g") {
        Err(TermError::Syntax { position, .. }) => assert_eq!(position, 4),
        other => panic!("{other:?}"),
    }
    match parse_untyped("mu[A") {
        Err(TermError::Syntax { position, .. }) => assert_eq!(position, 4),
        other => panic!("{other:?}"),
    }
    assert!(matches!(parse_untyped("f $ g"), Err(TermError::Syntax { position: 2, .. })));
    assert_eq!(parse("q", &sig()), Err(TermError::UnknownGenerator("q".into())));
    assert_eq!(parse("__in", &sig()), Err(TermError::ReservedName("__in".into())));
    assert_eq!(parse("id[Z]", &sig()), Err(TermError::UnknownObject("Z".into())));
}

#[test]
fn precedence() {
    let t = parse_untyped("f ; g * h ^").unwrap();
    assert_eq!(t, Term::gen("f").then(Term::gen("g").par(Term::gen("h").dag())));
    let t = parse_untyped("(f ; g)^ * id[]").unwrap();
    assert_eq!(t, Term::gen("f").then(Term::gen("g")).dag().par(Term::Id(vec![])));
}

#[test]
fn display_round_trips() {
    for text in [
        "f ; g * h^",
        "f ; (g ; h)",
        "f * (g * h)",
        "(f ; g)^^",
        "id[A,B] * id[] ; swap[A,B]",
        "eta[A] ; cap[B] * delta[A] ; cup[A] * eps[A] * mu[C]",
    ] {
        let t = parse_untyped(text).unwrap();
        assert_eq!(parse_untyped(&t.to_string()).unwrap(), t, "{text}");
    }
    assert_eq!(parse_untyped("f;(g;h)").unwrap().to_string(), "f ; (g ; h)");
}

#[test]
fn dagger_needs_partners() {
    assert_eq!(parse("f^", &sig()), Err(TermError::NoDagger("f".into())));
    assert!(parse("mu[A]^", &sig()).is_ok());
}

#[test]
fn elaborate_generator() {
    let s = sig();
    let d = elaborate(&Term::gen("f"), &s).unwrap();
    assert_eq!(
        d,
        MorphismClass::generator(&GeneratorKind::Box("f".into()), &s).unwrap()
    );
}

#[test]
fn connected_scfa_fuses_to_one_dot() {
    let d = el("mu[A] * id[A] ; mu[A] ; delta[A] ; id[A] * delta[A] ; mu[A] * id[A]");
    assert!(iso(&d, &DotDiagram::spider(3, 2, "A")));
    let d = el("eta[A] ; delta[A] ; mu[A] ; eps[A]");
    assert!(iso(&d, &DotDiagram::spider(0, 0, "A")));
}

#[test]
fn snake_equations() {
    let id = el("id[A]");
    assert!(iso(&el("id[A] * cap[A] ; cup[A] * id[A]"), &id));
    assert!(iso(&el("cap[A] * id[A] ; id[A] * cup[A]"), &id));
}

#[test]
fn frobenius_axioms() {
    let pairs = [
        ("mu[A] * id[A] ; mu[A]", "id[A] * mu[A] ; mu[A]"),
        ("eta[A] * id[A] ; mu[A]", "id[A]"),
        ("swap[A,A] ; mu[A]", "mu[A]"),
        ("delta[A] ; delta[A] * id[A]", "delta[A] ; id[A] * delta[A]"),
        ("delta[A] ; eps[A] * id[A]", "id[A]"),
        ("delta[A] ; swap[A,A]", "delta[A]"),
        ("delta[A] * id[A] ; id[A] * mu[A]", "mu[A] ; delta[A]"),
        ("id[A] * delta[A] ; mu[A] * id[A]", "mu[A] ; delta[A]"),
        ("delta[A] ; mu[A]", "id[A]"),
        ("mu[A]^", "delta[A]"),
        ("eta[A]^", "eps[A]"),
    ];
    for (l, r) in pairs {
        assert!(iso(&el(l), &el(r)), "{l} vs {r}");
    }
}

#[test]
fn expand_identity_and_mu() {
    assert_eq!(expand(&DotDiagram::spider(1, 1, "A")), Term::id(&["A"]));
    assert_eq!(expand(&DotDiagram::spider(2, 1, "A")), Term::Mu("A".into()));
    assert_eq!(expand(&DotDiagram::empty()), Term::Id(vec![]));
}

#[test]
fn spider_terms_have_canonical_shape() {
    assert_eq!(spider_term(0, 0, "A").to_string(), "eta[A] ; eps[A]");
    assert_eq!(spider_term(3, 1, "A").to_string(), "mu[A] * id[A] ; mu[A]");
    assert_eq!(spider_term(1, 3, "A").to_string(), "delta[A] ; delta[A] * id[A]");
    assert_eq!(spider_term(0, 2, "A").to_string(), "eta[A] ; delta[A]");
    let s = sig();
    for m in 0..4 {
        for n in 0..4 {
            let t = spider_term(m, n, "A");
            let d = t.to_diagram(&s).unwrap();
            assert!(iso(&d, &DotDiagram::spider(m, n, "A")), "{m} {n}");
        }
    }
}

#[test]
fn permutations() {
    let s = sig();
    let word = w(&["A", "B", "C"]);
    let t = permutation_term(&word, &[2, 0, 1]);
    assert_eq!(t.typ(&s).unwrap(), (word.clone(), w(&["C", "A", "B"])));
    assert_eq!(permutation_term(&word, &[0, 1, 2]), Term::Id(word));
}

#[test]
fn expand_round_trips() {
    let s = sig();
    for text in [
        "f",
        "f ; h",
        "k ; delta[A] ; f * f",
        "swap[A,C] ; g * f",
        "eta[A] ; f ; h",
        "(eta[B] ; eps[B]) * f",
        "delta[A] ; k ; delta[A] ; delta[A] * f ; k * id[B]",
        "id[A] * cap[A] ; k * id[A] ; f * id[A]",
    ] {
        let t = parse(text, &s).unwrap();
        let d = t.to_diagram(&s).unwrap();
        let e = expand(&d);
        let typed = e.typ(&s).unwrap();
        assert_eq!(typed, (d.dom(), d.cod()), "{text}");
        assert!(iso(&e.to_diagram(&s).unwrap(), &d), "{text} -> {e}");
    }
}
