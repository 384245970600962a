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

//! Deciding equality of morphisms of the free hypergraph category by
//! evaluating them in matrix models built to tell them apart.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use thiserror::Error;

use crate::diagram::{count_homs, DiagramError, DotDiagram, GeneratorKind, HomConstraint};
use crate::matrix::{IndexSet, Matrix, MatrixError, Model};
use crate::semiring::{
    find_nonroot, EvaluationPoint, GaussianRational, Monomial, Polynomial, Ring, Semiring, SemiringError, Var,
};
use crate::signature::{PortBoxes, Signature, SignatureError};
use crate::Word;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CompleteError {
    #[error(transparent)]
    Diagram(#[from] DiagramError),
    #[error(transparent)]
    Signature(#[from] SignatureError),
    #[error(transparent)]
    Matrix(#[from] MatrixError),
    #[error(transparent)]
    Semiring(#[from] SemiringError),
    #[error("morphisms have different types: {lhs:?} vs {rhs:?}")]
    TypeMismatch { lhs: (Word, Word), rhs: (Word, Word) },
    #[error("diagram must be simple and closed")]
    NotSimpleClosed,
    #[error("witness does not separate the two sides")]
    WitnessFailed,
}

/// Every object gets two indices and every generator the all-ones matrix, so
/// a closed diagram evaluates to `2^(number of dots)`.
pub fn dot_count_model<R: Semiring>(sig: &Signature) -> Model<R> {
    Model::from_fn(sig, |_| 2, |_, _, _| R::one())
}

const PRIMES: [usize; 16] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53];

/// Gives each object labelling a dot of `f` or `g` its own prime `p_A` as
/// index-set size (other objects get size 1); generators are 1 only where
/// every index is the first one. A simple closed diagram evaluates to 1 and a
/// free dot of type `A` to `p_A`.
pub fn free_dot_model<R: Semiring>(sig: &Signature, f: &DotDiagram, g: &DotDiagram) -> Model<R> {
    let mut primes: BTreeMap<&str, usize> = BTreeMap::new();
    for a in f.dots().iter().chain(g.dots()) {
        primes.insert(a, 0);
    }
    for (k, p) in primes.values_mut().enumerate() {
        *p = PRIMES.get(k).copied().unwrap_or_else(|| nth_prime(k));
    }
    Model::from_fn(
        sig,
        |a| primes.get(a).copied().unwrap_or(1),
        |_, r, c| {
            if r.iter().chain(c).all(|&x| x == 0) {
                R::one()
            } else {
                R::zero()
            }
        },
    )
}

fn nth_prime(k: usize) -> usize {
    (2..)
        .filter(|&n: &usize| (2..n).take_while(|d| d * d <= n).all(|d| n % d != 0))
        .nth(k)
        .expect("infinitely many primes")
}

/// The polynomial model of a simple closed diagram `f`.
///
/// Object `A` is interpreted as the set of dots of `f` labelled `A` and each
/// box `b` contributes the indicator of its wiring, weighted by the variable
/// `X_b`, to the matrix of its label. With `dagger_mode`, a box labelled `g†`
/// also contributes the conjugate transpose of its indicator (weighted by
/// `Xbar_b`) to `g`, which makes the model dagger-compatible.
///
/// Objects labelling no dot get an empty index set.
pub fn poly_model(sig: &Signature, f: &DotDiagram, dagger_mode: bool) -> Result<Model<Polynomial>, CompleteError> {
    if !f.is_closed() || !f.is_simple() {
        return Err(CompleteError::NotSimpleClosed);
    }
    f.validate(sig)?;
    let mut local = vec![0; f.num_dots()];
    let mut labels: BTreeMap<&str, Vec<String>> = sig.objects().map(|a| (a, Vec::new())).collect();
    for (d, a) in f.dots().iter().enumerate() {
        let set = labels.get_mut(a.as_str()).expect("validated");
        local[d] = set.len();
        set.push(format!("d{d}"));
    }
    let mut model = Model::new();
    for (a, ls) in labels {
        model.set_object(a, IndexSet::from_labels(ls));
    }
    let at = |ds: &[usize]| -> Vec<usize> { ds.iter().map(|&d| local[d]).collect() };
    for decl in sig.generators() {
        let rows = model.legs(&decl.cod)?;
        let cols = model.legs(&decl.dom)?;
        let mut m: Matrix<Polynomial> = Matrix::zeros(rows, cols);
        let partner = sig.dagger_name(&decl.name);
        for (b, node) in f.boxes().iter().enumerate() {
            let index = b as u32;
            if node.label == decl.name {
                add(&mut m, &at(&node.outputs), &at(&node.inputs), Var::x(index));
            }
            if dagger_mode && partner == Some(node.label.as_str()) {
                add(&mut m, &at(&node.inputs), &at(&node.outputs), Var::xbar(index));
            }
        }
        model.set_generator(&decl.name, m);
    }
    Ok(model)
}

fn add(m: &mut Matrix<Polynomial>, row: &[usize], col: &[usize], v: Var) {
    let r = crate::matrix::encode(row, m.row_legs());
    let c = crate::matrix::encode(col, m.col_legs());
    m.add_at(r, c, &Polynomial::var(v));
}

/// `∏_b X_b` over the boxes of `f`.
pub fn magic_monomial(f: &DotDiagram) -> Monomial {
    Monomial::product_of((0..f.num_boxes() as u32).map(Var::x))
}

/// Number of homomorphisms `g -> f` that are bijective on boxes.
pub fn bbij_count(g: &DotDiagram, f: &DotDiagram) -> usize {
    count_homs(g, f, HomConstraint::BoxBijective)
}

/// Coefficient of [`magic_monomial`]`(f)` in `⟦g⟧_f`.
pub fn magic_coefficient(sig: &Signature, f: &DotDiagram, g: &DotDiagram, dagger_mode: bool) -> Result<BigInt, CompleteError> {
    let model = poly_model(sig, f, dagger_mode)?;
    let value = scalar(model.eval_contraction(g)?);
    Ok(value.coefficient_of(&magic_monomial(f)))
}

fn scalar<R: Semiring>(m: Matrix<R>) -> R {
    debug_assert_eq!((m.rows(), m.cols()), (1, 1));
    m.data().first().cloned().unwrap_or_else(R::zero)
}

/// Both sides of an equation, closed off with fresh port boxes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Closure {
    pub signature: Signature,
    pub ports: PortBoxes,
    pub lhs: DotDiagram,
    pub rhs: DotDiagram,
}

/// Composes both sides with new boxes `i : I -> dom` and `o : cod -> I`.
/// The new boxes are rigid, so `lhs ≅ rhs` iff their closures are.
pub fn close_up(sig: &Signature, lhs: &DotDiagram, rhs: &DotDiagram) -> Result<Closure, CompleteError> {
    let (dom, cod) = (lhs.dom(), lhs.cod());
    if dom != rhs.dom() || cod != rhs.cod() {
        return Err(CompleteError::TypeMismatch {
            lhs: (dom, cod),
            rhs: (rhs.dom(), rhs.cod()),
        });
    }
    let (signature, ports) = sig.extend_with_ports(&dom, &cod)?;
    let input = DotDiagram::generator(&GeneratorKind::Box(ports.input.clone()), &signature)?;
    let output = DotDiagram::generator(&GeneratorKind::Box(ports.output.clone()), &signature)?;
    let close = |d: &DotDiagram| -> Result<DotDiagram, DiagramError> { input.compose(d)?.compose(&output) };
    Ok(Closure {
        lhs: close(lhs)?,
        rhs: close(rhs)?,
        signature,
        ports,
    })
}

/// Closes `d` with units on its inputs and counits on its outputs. This does
/// not reflect isomorphism and is kept for comparison with [`close_up`].
pub fn close_with_units(sig: &Signature, d: &DotDiagram) -> Result<DotDiagram, CompleteError> {
    let units = d
        .dom()
        .iter()
        .map(|a| DotDiagram::generator(&GeneratorKind::Eta(a.clone()), sig))
        .try_fold(DotDiagram::empty(), |acc, g| g.map(|g| acc.tensor(&g)))?;
    let counits = d
        .cod()
        .iter()
        .map(|a| DotDiagram::generator(&GeneratorKind::Epsilon(a.clone()), sig))
        .try_fold(DotDiagram::empty(), |acc, g| g.map(|g| acc.tensor(&g)))?;
    Ok(units.compose(d)?.compose(&counits)?)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Verdict {
    Equal,
    Distinct,
}

/// The construction that separated the two sides.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Route {
    FreeDots,
    DotCount,
    MagicCoefficient,
}

impl Route {
    pub fn name(self) -> &'static str {
        match self {
            Route::FreeDots => "free-dot-primes",
            Route::DotCount => "dot-count",
            Route::MagicCoefficient => "magic-coefficient",
        }
    }

    pub fn from_name(s: &str) -> Option<Route> {
        [Route::FreeDots, Route::DotCount, Route::MagicCoefficient]
            .into_iter()
            .find(|r| r.name() == s)
    }
}

/// What one stage of the pipeline computed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StageRecord {
    pub stage: Route,
    pub lhs_value: String,
    pub rhs_value: String,
    pub separates: bool,
}

/// A scalar model under which the closures evaluate differently.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Witness {
    pub model: Model<GaussianRational>,
    /// Values given to the box variables, for the polynomial route.
    pub point: Option<EvaluationPoint<GaussianRational>>,
    pub lhs_value: GaussianRational,
    pub rhs_value: GaussianRational,
}

impl Witness {
    /// Re-evaluates both closures; `true` when they still differ and match
    /// the recorded values.
    pub fn replay(&self, lhs: &DotDiagram, rhs: &DotDiagram) -> Result<bool, CompleteError> {
        let l = scalar(self.model.eval_contraction(lhs)?);
        let r = scalar(self.model.eval_contraction(rhs)?);
        Ok(l != r && l == self.lhs_value && r == self.rhs_value)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DistinguisherReport {
    pub verdict: Verdict,
    pub route: Option<Route>,
    pub dagger_mode: bool,
    pub seed: u64,
    /// The input signature extended with the port boxes.
    pub signature: Signature,
    pub lhs_closure: DotDiagram,
    pub rhs_closure: DotDiagram,
    pub stages: Vec<StageRecord>,
    /// `⟦lhs⟧_F` and `⟦rhs⟧_F`, when the polynomial stage ran.
    pub polynomials: Option<(Polynomial, Polynomial)>,
    /// Objects whose index set in the polynomial model was empty.
    pub empty_objects: Vec<String>,
    pub witness: Option<Witness>,
}

impl DistinguisherReport {
    /// Checks the witness against the recorded closures. Reports with an
    /// `Equal` verdict carry no witness and replay trivially.
    pub fn replay(&self) -> Result<bool, CompleteError> {
        match (&self.verdict, &self.witness) {
            (Verdict::Equal, None) => Ok(true),
            (Verdict::Distinct, Some(w)) => {
                if self.dagger_mode && self.signature.is_dagger() {
                    w.model.validate(&self.signature, true)?;
                }
                w.replay(&self.lhs_closure, &self.rhs_closure)
            }
            _ => Ok(false),
        }
    }
}

fn scalar_witness(
    model: Model<GaussianRational>,
    point: Option<EvaluationPoint<GaussianRational>>,
    lhs: &DotDiagram,
    rhs: &DotDiagram,
) -> Result<Witness, CompleteError> {
    let lhs_value = scalar(model.eval_contraction(lhs)?);
    let rhs_value = scalar(model.eval_contraction(rhs)?);
    if lhs_value == rhs_value {
        return Err(CompleteError::WitnessFailed);
    }
    Ok(Witness {
        model,
        point,
        lhs_value,
        rhs_value,
    })
}

/// Decides whether `lhs` and `rhs` denote the same morphism of the free
/// (dagger-)hypergraph category.
///
/// Both sides are closed with fresh port boxes. The closures are then
/// compared by their free dots, their dot counts, and finally by the
/// polynomial model of the left closure; a `Distinct` verdict comes with a
/// scalar model over `Q` (over `Q(i)` in `dagger_mode`) that separates them.
/// The result depends only on the inputs and `seed`.
pub fn decide_equal(
    sig: &Signature,
    lhs: &DotDiagram,
    rhs: &DotDiagram,
    dagger_mode: bool,
    seed: u64,
) -> Result<DistinguisherReport, CompleteError> {
    lhs.validate(sig)?;
    rhs.validate(sig)?;
    let closure = close_up(sig, lhs, rhs)?;
    let ext = &closure.signature;
    let (cl, cr) = (&closure.lhs, &closure.rhs);
    let mut report = DistinguisherReport {
        verdict: Verdict::Equal,
        route: None,
        dagger_mode,
        seed,
        signature: ext.clone(),
        lhs_closure: cl.clone(),
        rhs_closure: cr.clone(),
        stages: Vec::new(),
        polynomials: None,
        empty_objects: Vec::new(),
        witness: None,
    };

    let (simple_l, free_l) = cl.split_free_dots()?;
    let (simple_r, free_r) = cr.split_free_dots()?;

    // free dots
    let model: Model<GaussianRational> = free_dot_model(ext, cl, cr);
    let (vl, vr) = (scalar(model.eval_contraction(cl)?), scalar(model.eval_contraction(cr)?));
    let separates = free_l != free_r;
    debug_assert_eq!(separates, vl != vr);
    report.stages.push(StageRecord {
        stage: Route::FreeDots,
        lhs_value: vl.to_string(),
        rhs_value: vr.to_string(),
        separates,
    });
    if separates {
        return finish(report, Route::FreeDots, scalar_witness(model, None, cl, cr)?);
    }

    // dot count
    let model: Model<GaussianRational> = dot_count_model(ext);
    let (vl, vr) = (scalar(model.eval_contraction(cl)?), scalar(model.eval_contraction(cr)?));
    let separates = simple_l.num_dots() != simple_r.num_dots();
    report.stages.push(StageRecord {
        stage: Route::DotCount,
        lhs_value: vl.to_string(),
        rhs_value: vr.to_string(),
        separates,
    });
    if separates {
        return finish(report, Route::DotCount, scalar_witness(model, None, cl, cr)?);
    }

    // polynomial model of the left closure
    let poly = poly_model(ext, &simple_l, dagger_mode)?;
    let pl = scalar(poly.eval_contraction(&simple_l)?);
    let pr = scalar(poly.eval_contraction(&simple_r)?);
    let separates = pl != pr;
    report.stages.push(StageRecord {
        stage: Route::MagicCoefficient,
        lhs_value: pl.to_string(),
        rhs_value: pr.to_string(),
        separates,
    });
    report.empty_objects = poly
        .objects()
        .iter()
        .filter(|(_, set)| set.is_empty())
        .map(|(a, _)| a.clone())
        .collect();
    report.polynomials = Some((pl.clone(), pr.clone()));
    if !separates {
        return Ok(report);
    }
    let point = find_nonroot(&pl.minus(&pr), dagger_mode, seed)?;
    let mut model = poly.map_result(|p| p.evaluate(&point))?;
    // Free dots multiply both sides by |A|; keep that factor non-zero.
    for a in free_l.keys() {
        if model.size(a)? == 0 {
            model = model.with_extra_index(ext, a, "pad")?;
        }
    }
    let witness = scalar_witness(model, Some(point), cl, cr)?;
    finish(report, Route::MagicCoefficient, witness)
}

fn finish(mut report: DistinguisherReport, route: Route, witness: Witness) -> Result<DistinguisherReport, CompleteError> {
    report.verdict = Verdict::Distinct;
    report.route = Some(route);
    report.witness = Some(witness);
    Ok(report)
}
