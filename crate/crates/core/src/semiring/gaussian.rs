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
use core::fmt;
use core::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::{fmt_rational, is_negative, parse_rational, Ring, Semiring, SemiringError};

/// `re + im·i` with exact rational parts. The involution is complex
/// conjugation.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct GaussianRational {
    pub re: BigRational,
    pub im: BigRational,
}

impl GaussianRational {
    pub fn new(re: BigRational, im: BigRational) -> Self {
        GaussianRational { re, im }
    }

    pub fn from_ints(re: i64, im: i64) -> Self {
        GaussianRational {
            re: BigRational::from_integer(re.into()),
            im: BigRational::from_integer(im.into()),
        }
    }

    pub fn real(re: BigRational) -> Self {
        GaussianRational { re, im: Zero::zero() }
    }

    pub fn i() -> Self {
        Self::from_ints(0, 1)
    }

    pub fn is_real(&self) -> bool {
        Zero::is_zero(&self.im)
    }

    pub fn conj(&self) -> Self {
        GaussianRational {
            re: self.re.clone(),
            im: -&self.im,
        }
    }
}

impl From<BigInt> for GaussianRational {
    fn from(n: BigInt) -> Self {
        Self::real(BigRational::from_integer(n))
    }
}

impl From<BigRational> for GaussianRational {
    fn from(q: BigRational) -> Self {
        Self::real(q)
    }
}

impl Semiring for GaussianRational {
    const HAS_NEGATION: bool = true;
    const INVOLUTION_TRIVIAL: bool = false;

    fn zero() -> Self {
        Self::default()
    }
    fn one() -> Self {
        Self::real(One::one())
    }
    fn plus(&self, rhs: &Self) -> Self {
        GaussianRational {
            re: &self.re + &rhs.re,
            im: &self.im + &rhs.im,
        }
    }
    fn times(&self, rhs: &Self) -> Self {
        GaussianRational {
            re: &self.re * &rhs.re - &self.im * &rhs.im,
            im: &self.re * &rhs.im + &self.im * &rhs.re,
        }
    }
    fn involute(&self) -> Self {
        self.conj()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(&self.re) && Zero::is_zero(&self.im)
    }
    fn from_count(n: u64) -> Self {
        Self::from(BigInt::from(n))
    }
}

impl Ring for GaussianRational {
    fn negate(&self) -> Self {
        GaussianRational {
            re: -&self.re,
            im: -&self.im,
        }
    }
    fn from_integer(n: &BigInt) -> Self {
        Self::from(n.clone())
    }
}

/// Formats as `3`, `2i`, `-i`, `1+2i`, `1/2-3/4i`.
impl fmt::Display for GaussianRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if Zero::is_zero(&self.im) {
            return fmt_rational(&self.re, f);
        }
        if !Zero::is_zero(&self.re) {
            fmt_rational(&self.re, f)?;
            if !is_negative(&self.im) {
                write!(f, "+")?;
            }
        }
        if One::is_one(&self.im) {
            write!(f, "i")
        } else if One::is_one(&(-&self.im)) {
            write!(f, "-i")
        } else {
            fmt_rational(&self.im, f)?;
            write!(f, "i")
        }
    }
}

impl FromStr for GaussianRational {
    type Err = SemiringError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let compact: alloc::string::String = s.chars().filter(|c| !c.is_whitespace()).collect();
        let err = || SemiringError::Parse(s.to_string());
        if compact.is_empty() {
            return Err(err());
        }
        let Some(body) = compact.strip_suffix('i') else {
            return Ok(Self::real(parse_rational(&compact)?));
        };
        // split at the last sign that is not leading and not after '/'
        let bytes = body.as_bytes();
        let split = (1..bytes.len())
            .rev()
            .find(|&k| (bytes[k] == b'+' || bytes[k] == b'-') && bytes[k - 1] != b'/');
        let (re, im) = match split {
            Some(k) => (&body[..k], &body[k..]),
            None => ("0", body),
        };
        let im = match im {
            "" | "+" => "1",
            "-" => "-1",
            other => other.strip_prefix('+').unwrap_or(other),
        };
        Ok(GaussianRational {
            re: parse_rational(re).map_err(|_| err())?,
            im: parse_rational(im).map_err(|_| err())?,
        })
    }
}
