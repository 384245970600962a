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

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed};

use super::{Ring, Semiring, SemiringError};

/// A variable `X_b` (or its conjugate `Xbar_b`) attached to box `b`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Var {
    pub index: u32,
    pub conjugate: bool,
}

impl Var {
    pub fn x(index: u32) -> Self {
        Var { index, conjugate: false }
    }

    pub fn xbar(index: u32) -> Self {
        Var { index, conjugate: true }
    }

    pub fn involute(self) -> Self {
        Var {
            conjugate: !self.conjugate,
            ..self
        }
    }
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.conjugate {
            write!(f, "Xbar_b{}", self.index)
        } else {
            write!(f, "X_b{}", self.index)
        }
    }
}

/// A monomial as a sorted list of `(variable, exponent)` with positive
/// exponents. The empty monomial is `1`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Monomial {
    factors: Vec<(Var, u32)>,
}

impl Monomial {
    pub fn one() -> Self {
        Monomial::default()
    }

    pub fn var(v: Var) -> Self {
        Monomial {
            factors: alloc::vec![(v, 1)],
        }
    }

    /// The product of `vars`, repeated variables raising the exponent.
    pub fn product_of<I: IntoIterator<Item = Var>>(vars: I) -> Self {
        let mut counts: BTreeMap<Var, u32> = BTreeMap::new();
        for v in vars {
            *counts.entry(v).or_insert(0) += 1;
        }
        Monomial {
            factors: counts.into_iter().collect(),
        }
    }

    pub fn factors(&self) -> &[(Var, u32)] {
        &self.factors
    }

    pub fn degree(&self) -> u32 {
        self.factors.iter().map(|&(_, e)| e).sum()
    }

    pub fn times(&self, rhs: &Monomial) -> Monomial {
        let mut counts: BTreeMap<Var, u32> = self.factors.iter().copied().collect();
        for &(v, e) in &rhs.factors {
            *counts.entry(v).or_insert(0) += e;
        }
        Monomial {
            factors: counts.into_iter().collect(),
        }
    }

    fn map_vars(&self, f: impl Fn(Var) -> Var) -> Monomial {
        let mut counts: BTreeMap<Var, u32> = BTreeMap::new();
        for &(v, e) in &self.factors {
            *counts.entry(f(v)).or_insert(0) += e;
        }
        Monomial {
            factors: counts.into_iter().collect(),
        }
    }

    pub fn involute(&self) -> Monomial {
        self.map_vars(Var::involute)
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.factors.is_empty() {
            return write!(f, "1");
        }
        for (k, (v, e)) in self.factors.iter().enumerate() {
            if k > 0 {
                write!(f, "*")?;
            }
            write!(f, "{v}")?;
            if *e > 1 {
                write!(f, "^{e}")?;
            }
        }
        Ok(())
    }
}

/// A sparse polynomial with integer coefficients over the variables
/// `X_b` and `Xbar_b`. Zero coefficients are never stored, so structural
/// equality is polynomial equality.
///
/// The involution swaps `X_b` and `Xbar_b`; on polynomials without conjugate
/// variables (the plain ring `Z[X]`) the image is again a polynomial in the
/// conjugates, and it is the identity only on constants.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Polynomial {
    terms: BTreeMap<Monomial, BigInt>,
}

impl Polynomial {
    pub fn constant(c: BigInt) -> Self {
        Self::term(c, Monomial::one())
    }

    pub fn var(v: Var) -> Self {
        Self::term(BigInt::from(1), Monomial::var(v))
    }

    pub fn term(c: BigInt, m: Monomial) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        Polynomial { terms }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &BigInt)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Exact coefficient of `m`; zero when absent.
    pub fn coefficient_of(&self, m: &Monomial) -> BigInt {
        self.terms.get(m).cloned().unwrap_or_default()
    }

    pub fn total_degree(&self) -> u32 {
        self.terms.keys().map(Monomial::degree).max().unwrap_or(0)
    }

    pub fn variables(&self) -> BTreeSet<Var> {
        self.terms
            .keys()
            .flat_map(|m| m.factors.iter().map(|&(v, _)| v))
            .collect()
    }

    fn add_term(&mut self, m: Monomial, c: BigInt) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            alloc::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            alloc::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    /// Substitutes `Xbar_b := X_b`, the image under an evaluation that is
    /// forced to treat the involution as trivial.
    pub fn identify_conjugates(&self) -> Polynomial {
        let mut out = Polynomial::default();
        for (m, c) in &self.terms {
            out.add_term(
                m.map_vars(|v| Var {
                    conjugate: false,
                    ..v
                }),
                c.clone(),
            );
        }
        out
    }

    /// Ring homomorphism into `K` sending `X_b` to `point[b]` and `Xbar_b`
    /// to its involute.
    pub fn evaluate<K: Ring>(&self, point: &EvaluationPoint<K>) -> Result<K, SemiringError> {
        let mut acc = K::zero();
        for (m, c) in &self.terms {
            let mut value = K::from_integer(c);
            for &(v, e) in &m.factors {
                let x = point.value(v).ok_or(SemiringError::MissingVariable(v))?;
                for _ in 0..e {
                    value = value.times(&x);
                }
            }
            acc = acc.plus(&value);
        }
        Ok(acc)
    }
}

impl Semiring for Polynomial {
    const HAS_NEGATION: bool = true;
    const INVOLUTION_TRIVIAL: bool = false;

    fn zero() -> Self {
        Polynomial::default()
    }
    fn one() -> Self {
        Self::constant(BigInt::from(1))
    }
    fn plus(&self, rhs: &Self) -> Self {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }
    fn times(&self, rhs: &Self) -> Self {
        let mut out = Polynomial::default();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &rhs.terms {
                out.add_term(m1.times(m2), c1 * c2);
            }
        }
        out
    }
    fn involute(&self) -> Self {
        let mut out = Polynomial::default();
        for (m, c) in &self.terms {
            out.add_term(m.involute(), c.clone());
        }
        out
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

impl Ring for Polynomial {
    fn negate(&self) -> Self {
        Polynomial {
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }
    fn from_integer(n: &BigInt) -> Self {
        Self::constant(n.clone())
    }
}

/// Terms from the largest monomial down, so a constant term comes last:
/// `2*X_b1*Xbar_b2 - X_b0 + 1`.
impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (m, c)) in self.terms.iter().rev().enumerate() {
            let negative = c.is_negative();
            match (k, negative) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            let abs = c.abs();
            if m.factors.is_empty() {
                write!(f, "{abs}")?;
            } else if abs.is_one() {
                write!(f, "{m}")?;
            } else {
                write!(f, "{abs}*{m}")?;
            }
        }
        Ok(())
    }
}

impl FromStr for Polynomial {
    type Err = SemiringError;

    /// Parses sums of terms `c*v1^e1*v2...` as printed by `Display`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let err = || SemiringError::Parse(s.to_string());
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if compact.is_empty() {
            return Err(err());
        }
        let mut out = Polynomial::default();
        let mut rest = compact.as_str();
        let mut sign = BigInt::from(1);
        if let Some(r) = rest.strip_prefix('-') {
            sign = -sign;
            rest = r;
        } else if let Some(r) = rest.strip_prefix('+') {
            rest = r;
        }
        loop {
            let end = rest.find(['+', '-']).unwrap_or(rest.len());
            let (term, tail) = rest.split_at(end);
            if term.is_empty() {
                return Err(err());
            }
            let mut coeff = sign.clone();
            let mut vars = Vec::new();
            for factor in term.split('*') {
                if factor.starts_with('X') {
                    let (name, exp) = match factor.split_once('^') {
                        Some((n, e)) => (n, e.parse::<u32>().map_err(|_| err())?),
                        None => (factor, 1),
                    };
                    let var = if let Some(i) = name.strip_prefix("Xbar_b") {
                        Var::xbar(i.parse().map_err(|_| err())?)
                    } else if let Some(i) = name.strip_prefix("X_b") {
                        Var::x(i.parse().map_err(|_| err())?)
                    } else {
                        return Err(err());
                    };
                    vars.extend(core::iter::repeat(var).take(exp as usize));
                } else {
                    let c: BigInt = factor.parse().map_err(|_| err())?;
                    coeff *= c;
                }
            }
            out.add_term(Monomial::product_of(vars), coeff);
            if tail.is_empty() {
                break;
            }
            sign = if tail.starts_with('-') { BigInt::from(-1) } else { BigInt::from(1) };
            rest = &tail[1..];
        }
        Ok(out)
    }
}

/// Values for the variables `X_b`; `Xbar_b` always evaluates to the
/// involute of the value of `X_b`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EvaluationPoint<K> {
    values: BTreeMap<u32, K>,
}

impl<K> Default for EvaluationPoint<K> {
    fn default() -> Self {
        EvaluationPoint { values: BTreeMap::new() }
    }
}

impl<K: Semiring> EvaluationPoint<K> {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn with(mut self, index: u32, value: K) -> Self {
        self.values.insert(index, value);
        self
    }

    pub fn set(&mut self, index: u32, value: K) {
        self.values.insert(index, value);
    }

    pub fn value(&self, v: Var) -> Option<K> {
        let x = self.values.get(&v.index)?;
        Some(if v.conjugate { x.involute() } else { x.clone() })
    }

    pub fn values(&self) -> impl Iterator<Item = (u32, &K)> {
        self.values.iter().map(|(&k, v)| (k, v))
    }
}
