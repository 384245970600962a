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

//! Free hypergraph categories as dot-diagrams, their matrix semantics over
//! involutive semirings, and a semantic decision procedure for morphism
//! equality.
//!
//! The crate is `no_std` and only needs `alloc`. The layers are:
//!
//! * [`signature`]: objects and typed generator boxes, with optional dagger pairing.
//! * [`diagram`]: dot-diagrams, the hypergraph category structure on them
//!   (pushout composition, tensor, dagger, swaps, Frobenius generators) and
//!   homomorphism / isomorphism search.
//! * [`term`]: a small expression language for string diagrams, elaborated
//!   into dot-diagrams and expanded back into canonical spider terms.
//! * [`semiring`]: exact scalars (integers, rationals, Gaussian rationals,
//!   sparse integer polynomials with a conjugation involution).
//! * [`matrix`]: set-indexed matrices, models of a signature, and the two
//!   evaluation routes (compositional and by tensor contraction).
//! * [`complete`]: the distinguishing models and the `decide_equal` pipeline.
//! * [`corpus`]: seeded generators of random diagrams and terms, used by the
//!   test suites and the CLI.
#![no_std]
#![deny(unsafe_code)]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod complete;
pub mod corpus;
pub mod diagram;
pub mod matrix;
pub mod semiring;
pub mod signature;
pub mod term;
mod union_find;


pub use complete::{decide_equal, CompleteError, DistinguisherReport, Route, Verdict};
pub use matrix::{IndexSet, Matrix, MatrixError, Model};
pub use term::{elaborate, expand, parse, Term, TermError};
pub use diagram::{DotDiagram, GeneratorKind, Hom, HomConstraint, MorphismClass};


pub use signature::{GeneratorDecl, Signature, SignatureError};


/// A word of object names. The monoidal unit is the empty word.
pub type Word = alloc::vec::Vec<alloc::string::String>;
