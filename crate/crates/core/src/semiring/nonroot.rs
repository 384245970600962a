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

use num_bigint::BigInt;
use num_rational::BigRational;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{EvaluationPoint, GaussianRational, Polynomial, Semiring, SemiringError};

const ATTEMPTS_PER_ROUND: usize = 32;
const MAX_ROUNDS: u32 = 48;

/// Finds an evaluation point at which `p` is non-zero, by seeded random
/// sampling from a growing integer box `[-N, N]` with `N` starting at
/// `deg(p) + 1` and doubling every round.
///
/// In `dagger_mode` each `X_b` gets a Gaussian integer `a + bi` (with
/// `b != 0` during the first round) and `Xbar_b` is forced to `a - bi`.
/// Otherwise all values are real integers. Every returned point has been
/// checked by evaluation.
pub fn find_nonroot(
    p: &Polynomial,
    dagger_mode: bool,
    seed: u64,
) -> Result<EvaluationPoint<GaussianRational>, SemiringError> {
    if p.is_zero() {
        return Err(SemiringError::ZeroPolynomial);
    }
    if !dagger_mode && p.identify_conjugates().is_zero() {
        return Err(SemiringError::NoRealNonRoot);
    }
    let indices: alloc::vec::Vec<u32> = {
        let mut v: alloc::vec::Vec<u32> = p.variables().into_iter().map(|v| v.index).collect();
        v.dedup();
        v
    };
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut bound: i64 = i64::from(p.total_degree()) + 1;
    for round in 0..MAX_ROUNDS {
        for _ in 0..ATTEMPTS_PER_ROUND {
            let mut point = EvaluationPoint::new();
            for &index in &indices {
                let re = rng.gen_range(-bound..=bound);
                let im = if !dagger_mode {
                    0
                } else if round == 0 {
                    let magnitude = rng.gen_range(1..=bound);
                    if rng.gen::<bool>() {
                        magnitude
                    } else {
                        -magnitude
                    }
                } else {
                    rng.gen_range(-bound..=bound)
                };
                point.set(
                    index,
                    GaussianRational::new(
                        BigRational::from_integer(BigInt::from(re)),
                        BigRational::from_integer(BigInt::from(im)),
                    ),
                );
            }
            if !p.evaluate(&point)?.is_zero() {
                return Ok(point);
            }
        }
        bound = bound.saturating_mul(2);
    }
    Err(SemiringError::SearchExhausted)
}
