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
use alloc::string::ToString;
use alloc::vec::Vec;
use proptest::prelude::*;

fn check_laws<R: Semiring>(a: &R, b: &R, c: &R) {
    assert_eq!(a.plus(b).plus(c), a.plus(&b.plus(c)));
    assert_eq!(a.times(b).times(c), a.times(&b.times(c)));
    assert_eq!(a.plus(b), b.plus(a));
    assert_eq!(a.times(b), b.times(a));
    assert_eq!(a.times(&b.plus(c)), a.times(b).plus(&a.times(c)));
    assert_eq!(a.plus(&R::zero()), *a);
    assert_eq!(a.times(&R::one()), *a);
    assert!(a.times(&R::zero()).is_zero());
    assert_eq!(a.times(b).involute(), a.involute().times(&b.involute()));
    assert_eq!(a.plus(b).involute(), a.involute().plus(&b.involute()));
    assert_eq!(a.involute().involute(), *a);
    if R::INVOLUTION_TRIVIAL {
        assert_eq!(a.involute(), *a);
    }
}

fn check_ring<R: Ring>(a: &R) {
    assert!(a.plus(&a.negate()).is_zero());
    assert!(a.minus(a).is_zero());
}

fn int() -> impl Strategy<Value = BigInt> {
    (-1000i64..1000).prop_map(BigInt::from)
}

fn rat() -> impl Strategy<Value = BigRational> {
    (-50i64..50, 1i64..20).prop_map(|(n, d)| BigRational::new(n.into(), d.into()))
}

fn gauss() -> impl Strategy<Value = GaussianRational> {
    (rat(), rat()).prop_map(|(re, im)| GaussianRational::new(re, im))
}

fn poly() -> impl Strategy<Value = Polynomial> {
    let term = (-5i64..5, proptest::collection::vec((0u32..3, any::<bool>()), 0..3));
    proptest::collection::vec(term, 0..4).prop_map(|terms| {
        terms.into_iter().fold(Polynomial::zero(), |acc, (c, vars)| {
            let m = Monomial::product_of(vars.into_iter().map(|(i, bar)| Var { index: i, conjugate: bar }));
            acc.plus(&Polynomial::term(c.into(), m))
        })
    })
}

proptest! {
    #[test]
    fn integer_laws(a in int(), b in int(), c in int()) {
        check_laws(&a, &b, &c);
        check_ring(&a);
    }

    #[test]
    fn rational_laws(a in rat(), b in rat(), c in rat()) {
        check_laws(&a, &b, &c);
        check_ring(&a);
    }

    #[test]
    fn gaussian_laws(a in gauss(), b in gauss(), c in gauss()) {
        check_laws(&a, &b, &c);
        check_ring(&a);
    }

    #[test]
    fn polynomial_laws(a in poly(), b in poly(), c in poly()) {
        check_laws(&a, &b, &c);
        check_ring(&a);
    }

    #[test]
    fn polynomial_display_parses_back(p in poly()) {
        let text = p.to_string();
        prop_assert_eq!(text.parse::<Polynomial>().unwrap(), p);
    }

    #[test]
    fn gaussian_display_parses_back(z in gauss()) {
        prop_assert_eq!(z.to_string().parse::<GaussianRational>().unwrap(), z);
    }

    #[test]
    fn evaluation_is_a_homomorphism(p in poly(), q in poly(), xs in proptest::collection::vec((-4i64..4, -4i64..4), 3)) {
        let mut point = EvaluationPoint::new();
        for (i, (re, im)) in xs.into_iter().enumerate() {
            point.set(i as u32, GaussianRational::from_ints(re, im));
        }
        let (ep, eq) = (p.evaluate(&point).unwrap(), q.evaluate(&point).unwrap());
        prop_assert_eq!(p.times(&q).evaluate(&point).unwrap(), ep.times(&eq));
        prop_assert_eq!(p.plus(&q).evaluate(&point).unwrap(), ep.plus(&eq));
        prop_assert_eq!(p.involute().evaluate(&point).unwrap(), ep.involute());
    }

    #[test]
    fn nonroot_is_never_a_root(p in poly(), dagger in any::<bool>(), seed in any::<u64>()) {
        prop_assume!(!p.is_zero());
        if !dagger && p.identify_conjugates().is_zero() {
            prop_assert_eq!(find_nonroot(&p, dagger, seed), Err(SemiringError::NoRealNonRoot));
            return Ok(());
        }
        let point = find_nonroot(&p, dagger, seed).unwrap();
        prop_assert!(!p.evaluate(&point).unwrap().is_zero());
        if !dagger {
            prop_assert!(point.values().all(|(_, z)| z.is_real()));
        }
    }
}

fn x(i: u32) -> Polynomial {
    Polynomial::var(Var::x(i))
}

fn xbar(i: u32) -> Polynomial {
    Polynomial::var(Var::xbar(i))
}

#[test]
fn product_example() {
    let p = x(1).plus(&x(2)).times(&x(1));
    let expected = Polynomial::term(1.into(), Monomial::product_of([Var::x(1), Var::x(1)]))
        .plus(&Polynomial::term(1.into(), Monomial::product_of([Var::x(1), Var::x(2)])));
    assert_eq!(p, expected);
    assert_eq!(p.to_string(), "X_b1^2 + X_b1*X_b2");
    assert_eq!(p.plus(&Polynomial::zero()), p);
}

#[test]
fn involution_swaps_conjugates() {
    let p = x(1).times(&xbar(2));
    assert_eq!(p.involute(), xbar(1).times(&x(2)));
    assert_eq!(p.involute().to_string(), "Xbar_b1*X_b2");
}

#[test]
fn display_format() {
    let p = Polynomial::term(2.into(), Monomial::product_of([Var::x(1), Var::xbar(2)])).plus(&Polynomial::one());
    assert_eq!(p.to_string(), "2*X_b1*Xbar_b2 + 1");
    let q = x(0).minus(&Polynomial::constant(3.into()));
    assert_eq!(q.to_string(), "X_b0 - 3");
    assert_eq!(Polynomial::zero().to_string(), "0");
    assert_eq!(x(0).negate().to_string(), "-X_b0");
}

#[test]
fn coefficient_examples() {
    let p = Polynomial::term(3.into(), Monomial::product_of([Var::x(1), Var::x(2)]))
        .plus(&Polynomial::term(1.into(), Monomial::product_of([Var::x(1), Var::x(1)])));
    assert_eq!(p.coefficient_of(&Monomial::product_of([Var::x(2), Var::x(1)])), BigInt::from(3));
    assert_eq!(Polynomial::zero().coefficient_of(&Monomial::var(Var::x(5))), BigInt::from(0));
}

#[test]
fn evaluation_examples() {
    let point = EvaluationPoint::new().with(1, GaussianRational::i());
    assert!(x(1).plus(&xbar(1)).evaluate(&point).unwrap().is_zero());

    let point = EvaluationPoint::new().with(1, BigInt::from(2)).with(2, BigInt::from(3));
    assert_eq!(x(1).times(&x(2)).evaluate(&point).unwrap(), BigInt::from(6));

    assert_eq!(
        x(7).evaluate(&point),
        Err(SemiringError::MissingVariable(Var::x(7)))
    );
}

#[test]
fn nonroot_examples() {
    let p = x(1);
    let pt = find_nonroot(&p, false, 0).unwrap();
    assert!(!p.evaluate(&pt).unwrap().is_zero());

    let p = x(1).minus(&x(2));
    let pt = find_nonroot(&p, false, 1).unwrap();
    assert_ne!(pt.value(Var::x(1)), pt.value(Var::x(2)));

    let p = x(1).minus(&xbar(1));
    // X_1 := i gives i - (-i) = 2i
    let at_i = EvaluationPoint::new().with(1, GaussianRational::i());
    assert_eq!(p.evaluate(&at_i).unwrap(), GaussianRational::from_ints(0, 2));
    let pt = find_nonroot(&p, true, 2).unwrap();
    assert!(!p.evaluate(&pt).unwrap().is_zero());
    // no real point separates it
    assert!(p.identify_conjugates().is_zero());
    assert_eq!(find_nonroot(&p.identify_conjugates(), true, 0), Err(SemiringError::ZeroPolynomial));
    assert_eq!(find_nonroot(&p, false, 0), Err(SemiringError::NoRealNonRoot));
}

#[test]
fn nonroot_is_seeded() {
    let p = x(0).times(&x(1)).minus(&x(2));
    assert_eq!(find_nonroot(&p, true, 42).unwrap(), find_nonroot(&p, true, 42).unwrap());
}

#[test]
fn gaussian_display_and_parse() {
    let cases = [
        (GaussianRational::from_ints(3, 0), "3"),
        (GaussianRational::from_ints(0, 2), "2i"),
        (GaussianRational::from_ints(0, -1), "-i"),
        (GaussianRational::from_ints(1, 2), "1+2i"),
        (GaussianRational::from_ints(-1, -1), "-1-i"),
        (
            GaussianRational::new(BigRational::new(1.into(), 2.into()), BigRational::new((-3).into(), 4.into())),
            "1/2-3/4i",
        ),
    ];
    for (z, s) in cases {
        assert_eq!(z.to_string(), s);
        assert_eq!(s.parse::<GaussianRational>().unwrap(), z);
    }
    assert_eq!("i".parse::<GaussianRational>().unwrap(), GaussianRational::i());
    assert_eq!(" 2 + i ".parse::<GaussianRational>().unwrap(), GaussianRational::from_ints(2, 1));
    assert!("abc".parse::<GaussianRational>().is_err());
    assert!("1/0".parse::<GaussianRational>().is_err());
}

#[test]
fn conjugation_of_i() {
    assert_eq!(GaussianRational::i().involute(), GaussianRational::from_ints(0, -1));
    assert_eq!(GaussianRational::i().times(&GaussianRational::i()), GaussianRational::from_ints(-1, 0));
}

#[test]
fn from_count_matches_repeated_addition() {
    for n in 0..20u64 {
        let by_doubling = <GaussianRational as Semiring>::from_count(n);
        let by_hand = (0..n).fold(GaussianRational::zero(), |acc, _| acc.plus(&GaussianRational::one()));
        assert_eq!(by_doubling, by_hand);
        let p = <Polynomial as Semiring>::from_count(n);
        assert_eq!(p, Polynomial::constant(BigInt::from(n)));
    }
}

#[test]
fn polynomial_parse_rejects_garbage() {
    for bad in ["", "X_q1", "2**X_b1", "X_b1 +", "Y"] {
        assert!(bad.parse::<Polynomial>().is_err(), "{bad}");
    }
    let _unused: Vec<()> = Vec::new();
}
