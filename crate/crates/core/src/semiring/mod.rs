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

//! Commutative unital semirings with an involution, and the exact instances
//! used for evaluation: integers, rationals, Gaussian rationals and sparse
//! integer polynomials in variables `X_b` / `Xbar_b`.

mod gaussian;
mod nonroot;
mod poly;

use core::fmt;

use num_traits::{One, Signed, Zero};
use thiserror::Error;

pub use gaussian::GaussianRational;
pub use num_bigint::BigInt;
pub use num_rational::BigRational;
pub use nonroot::find_nonroot;
pub use poly::{EvaluationPoint, Monomial, Polynomial, Var};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SemiringError {
    #[error("no value assigned to variable {0}")]
    MissingVariable(Var),
    #[error("the zero polynomial has no non-root")]
    ZeroPolynomial,
    #[error("polynomial vanishes at every point with a trivial involution")]
    NoRealNonRoot,
    #[error("no non-root found within the search budget")]
    SearchExhausted,
    #[error("cannot parse {0:?} as a scalar")]
    Parse(alloc::string::String),
}

/// A commutative unital semiring with an involution `involute` that is a
/// semiring homomorphism of order at most two.
pub trait Semiring: Clone + PartialEq + fmt::Debug {
    /// Additive inverses exist.
    const HAS_NEGATION: bool;
    /// `involute` is the identity.
    const INVOLUTION_TRIVIAL: bool;

    fn zero() -> Self;
    fn one() -> Self;
    fn plus(&self, rhs: &Self) -> Self;
    fn times(&self, rhs: &Self) -> Self;
    fn involute(&self) -> Self;

    fn is_zero(&self) -> bool {
        *self == Self::zero()
    }

    /// `1 + 1 + ... + 1` (`n` times), by doubling.
    fn from_count(mut n: u64) -> Self {
        let mut acc = Self::zero();
        let mut unit = Self::one();
        while n > 0 {
            if n & 1 == 1 {
                acc = acc.plus(&unit);
            }
            unit = unit.plus(&unit);
            n >>= 1;
        }
        acc
    }
}

pub trait Ring: Semiring {
    fn negate(&self) -> Self;

    fn from_integer(n: &BigInt) -> Self;

    fn minus(&self, rhs: &Self) -> Self {
        self.plus(&rhs.negate())
    }
}

impl Semiring for BigInt {
    const HAS_NEGATION: bool = true;
    const INVOLUTION_TRIVIAL: bool = true;

    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn plus(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn times(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn involute(&self) -> Self {
        self.clone()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn from_count(n: u64) -> Self {
        BigInt::from(n)
    }
}

impl Ring for BigInt {
    fn negate(&self) -> Self {
        -self
    }
    fn from_integer(n: &BigInt) -> Self {
        n.clone()
    }
}

impl Semiring for BigRational {
    const HAS_NEGATION: bool = true;
    const INVOLUTION_TRIVIAL: bool = true;

    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn plus(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn times(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn involute(&self) -> Self {
        self.clone()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn from_count(n: u64) -> Self {
        BigRational::from_integer(BigInt::from(n))
    }
}

impl Ring for BigRational {
    fn negate(&self) -> Self {
        -self
    }
    fn from_integer(n: &BigInt) -> Self {
        BigRational::from_integer(n.clone())
    }
}

/// Parses `p` or `p/q`.
pub fn parse_rational(s: &str) -> Result<BigRational, SemiringError> {
    let err = || SemiringError::Parse(s.into());
    let s = s.trim();
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s, "1"),
    };
    let num: BigInt = num.parse().map_err(|_| err())?;
    let den: BigInt = den.parse().map_err(|_| err())?;
    if Zero::is_zero(&den) {
        return Err(err());
    }
    Ok(BigRational::new(num, den))
}

pub(crate) fn fmt_rational(q: &BigRational, f: &mut fmt::Formatter<'_>) -> fmt::Result {
    if q.is_integer() {
        write!(f, "{}", q.numer())
    } else {
        write!(f, "{}/{}", q.numer(), q.denom())
    }
}

pub(crate) fn is_negative(q: &BigRational) -> bool {
    q.is_negative()
}

#[cfg(test)]
mod tests;
