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

//! Matrices indexed by finite sets, over any [`Semiring`].
//!
//! A matrix `f : I -> J` has rows indexed by `J` (its codomain) and columns by
//! `I` (its domain). Index sets of tensor products are tuples; a matrix keeps
//! the size of every tensor factor ("leg") on both sides, and flat indices are
//! row-major over the legs with the first leg most significant.

mod model;

use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use thiserror::Error;

use crate::semiring::Semiring;

pub use model::{eval_compositional, eval_contraction, product_model, Model};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MatrixError {
    #[error("shape mismatch: expected legs {expected:?}, found {found:?}")]
    ShapeMismatch { expected: Vec<usize>, found: Vec<usize> },
    #[error("model assigns no index set to object {0:?}")]
    UnknownObject(String),
    #[error("model assigns no matrix to generator {0:?}")]
    UnknownGenerator(String),
    #[error("generator {name:?} has shape {found:?}, expected {expected:?}")]
    GeneratorShape {
        name: String,
        expected: (Vec<usize>, Vec<usize>),
        found: (Vec<usize>, Vec<usize>),
    },
    #[error("model is not dagger-compatible at generator {0:?}")]
    DaggerIncompatible(String),
    #[error("generator {0:?} has no dagger partner")]
    NoDagger(String),
    #[error("models disagree on the objects or generators they interpret")]
    IncompatibleModels,
}

/// A finite index set with printable element labels.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IndexSet {
    labels: Vec<String>,
}

impl IndexSet {
    /// `{0, 1, ..., n-1}`.
    pub fn of_size(n: usize) -> Self {
        IndexSet {
            labels: (0..n).map(|k| k.to_string()).collect(),
        }
    }

    pub fn from_labels(labels: Vec<String>) -> Self {
        IndexSet { labels }
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn position(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    pub(crate) fn push(&mut self, label: String) {
        self.labels.push(label);
    }
}

fn volume(legs: &[usize]) -> usize {
    legs.iter().product()
}

/// Flat index of a multi-index.
pub fn encode(index: &[usize], legs: &[usize]) -> usize {
    index.iter().zip(legs).fold(0, |acc, (&i, &n)| acc * n + i)
}

/// Multi-index of a flat index.
pub fn decode(mut flat: usize, legs: &[usize]) -> Vec<usize> {
    let mut out = vec![0; legs.len()];
    for k in (0..legs.len()).rev() {
        out[k] = flat % legs[k];
        flat /= legs[k];
    }
    out
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Matrix<R> {
    row_legs: Vec<usize>,
    col_legs: Vec<usize>,
    data: Vec<R>,
}

impl<R: Semiring> Matrix<R> {
    pub fn zeros(row_legs: Vec<usize>, col_legs: Vec<usize>) -> Self {
        let n = volume(&row_legs) * volume(&col_legs);
        Matrix {
            row_legs,
            col_legs,
            data: vec![R::zero(); n],
        }
    }

    pub fn from_fn(row_legs: Vec<usize>, col_legs: Vec<usize>, mut f: impl FnMut(&[usize], &[usize]) -> R) -> Self {
        let (rows, cols) = (volume(&row_legs), volume(&col_legs));
        let mut data = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            let ri = decode(r, &row_legs);
            for c in 0..cols {
                data.push(f(&ri, &decode(c, &col_legs)));
            }
        }
        Matrix {
            row_legs,
            col_legs,
            data,
        }
    }

    /// Builds from flat row-major data.
    pub fn from_data(row_legs: Vec<usize>, col_legs: Vec<usize>, data: Vec<R>) -> Result<Self, MatrixError> {
        let n = volume(&row_legs) * volume(&col_legs);
        if data.len() != n {
            return Err(MatrixError::ShapeMismatch {
                expected: vec![n],
                found: vec![data.len()],
            });
        }
        Ok(Matrix {
            row_legs,
            col_legs,
            data,
        })
    }

    /// A `1 x 1` matrix with no legs.
    pub fn scalar(value: R) -> Self {
        Matrix {
            row_legs: Vec::new(),
            col_legs: Vec::new(),
            data: vec![value],
        }
    }

    pub fn identity(legs: Vec<usize>) -> Self {
        Self::from_fn(legs.clone(), legs, |r, c| if r == c { R::one() } else { R::zero() })
    }

    /// Generalised Kronecker delta `S_m^n` on an index set of size `size`:
    /// 1 exactly when all `m + n` indices agree.
    pub fn spider(m: usize, n: usize, size: usize) -> Self {
        Self::from_fn(vec![size; n], vec![size; m], |r, c| {
            let mut all = r.iter().chain(c.iter());
            match all.next() {
                None => R::from_count(size as u64),
                Some(first) => {
                    if all.all(|x| x == first) {
                        R::one()
                    } else {
                        R::zero()
                    }
                }
            }
        })
    }

    /// Symmetry `I ⊗ J -> J ⊗ I`.
    pub fn swap(a: usize, b: usize) -> Self {
        Self::from_fn(vec![b, a], vec![a, b], |r, c| {
            if r[0] == c[1] && r[1] == c[0] {
                R::one()
            } else {
                R::zero()
            }
        })
    }

    pub fn row_legs(&self) -> &[usize] {
        &self.row_legs
    }

    pub fn col_legs(&self) -> &[usize] {
        &self.col_legs
    }

    pub fn rows(&self) -> usize {
        volume(&self.row_legs)
    }

    pub fn cols(&self) -> usize {
        volume(&self.col_legs)
    }

    pub fn get(&self, row: usize, col: usize) -> &R {
        &self.data[row * self.cols() + col]
    }

    pub fn get_multi(&self, row: &[usize], col: &[usize]) -> &R {
        self.get(encode(row, &self.row_legs), encode(col, &self.col_legs))
    }

    pub(crate) fn add_at(&mut self, row: usize, col: usize, value: &R) {
        let cols = self.cols();
        let slot = &mut self.data[row * cols + col];
        *slot = slot.plus(value);
    }

    pub fn data(&self) -> &[R] {
        &self.data
    }

    /// Non-zero entries as `(row, col, value)`.
    pub fn nonzero_entries(&self) -> impl Iterator<Item = (usize, usize, &R)> {
        let cols = self.cols().max(1);
        self.data
            .iter()
            .enumerate()
            .filter(|(_, v)| !v.is_zero())
            .map(move |(k, v)| (k / cols, k % cols, v))
    }

    /// `next ∘ self`, the ordinary matrix product `next · self`.
    pub fn then(&self, next: &Matrix<R>) -> Result<Matrix<R>, MatrixError> {
        if self.row_legs != next.col_legs {
            return Err(MatrixError::ShapeMismatch {
                expected: next.col_legs.clone(),
                found: self.row_legs.clone(),
            });
        }
        let (rows, mid, cols) = (next.rows(), self.rows(), self.cols());
        let mut data = vec![R::zero(); rows * cols];
        for k in 0..rows {
            for j in 0..mid {
                let a = next.get(k, j);
                if a.is_zero() {
                    continue;
                }
                for i in 0..cols {
                    let b = self.get(j, i);
                    if !b.is_zero() {
                        let slot = &mut data[k * cols + i];
                        *slot = slot.plus(&a.times(b));
                    }
                }
            }
        }
        Ok(Matrix {
            row_legs: next.row_legs.clone(),
            col_legs: self.col_legs.clone(),
            data,
        })
    }

    /// Kronecker product; legs of `self` come first.
    pub fn kron(&self, other: &Matrix<R>) -> Matrix<R> {
        let (r2, c2) = (other.rows(), other.cols());
        let cols = self.cols() * c2;
        let mut data = vec![R::zero(); self.rows() * r2 * cols];
        for (r1, c1, a) in self.nonzero_entries() {
            for (rr, cc, b) in other.nonzero_entries() {
                data[(r1 * r2 + rr) * cols + (c1 * c2 + cc)] = a.times(b);
            }
        }
        let mut row_legs = self.row_legs.clone();
        row_legs.extend_from_slice(&other.row_legs);
        let mut col_legs = self.col_legs.clone();
        col_legs.extend_from_slice(&other.col_legs);
        Matrix {
            row_legs,
            col_legs,
            data,
        }
    }

    /// Conjugate transpose.
    pub fn dagger(&self) -> Matrix<R> {
        let (rows, cols) = (self.rows(), self.cols());
        let mut data = Vec::with_capacity(rows * cols);
        for c in 0..cols {
            for r in 0..rows {
                data.push(self.get(r, c).involute());
            }
        }
        Matrix {
            row_legs: self.col_legs.clone(),
            col_legs: self.row_legs.clone(),
            data,
        }
    }

    /// Transpose without conjugation.
    pub fn transpose(&self) -> Matrix<R> {
        let (rows, cols) = (self.rows(), self.cols());
        let mut data = Vec::with_capacity(rows * cols);
        for c in 0..cols {
            for r in 0..rows {
                data.push(self.get(r, c).clone());
            }
        }
        Matrix {
            row_legs: self.col_legs.clone(),
            col_legs: self.row_legs.clone(),
            data,
        }
    }

    pub fn plus(&self, other: &Matrix<R>) -> Result<Matrix<R>, MatrixError> {
        if self.row_legs != other.row_legs || self.col_legs != other.col_legs {
            return Err(MatrixError::ShapeMismatch {
                expected: self.row_legs.iter().chain(&self.col_legs).copied().collect(),
                found: other.row_legs.iter().chain(&other.col_legs).copied().collect(),
            });
        }
        Ok(Matrix {
            row_legs: self.row_legs.clone(),
            col_legs: self.col_legs.clone(),
            data: self.data.iter().zip(&other.data).map(|(a, b)| a.plus(b)).collect(),
        })
    }

    pub fn map<S: Semiring>(&self, f: impl FnMut(&R) -> S) -> Matrix<S> {
        Matrix {
            row_legs: self.row_legs.clone(),
            col_legs: self.col_legs.clone(),
            data: self.data.iter().map(f).collect(),
        }
    }

    pub fn map_result<S: Semiring, E>(&self, f: impl FnMut(&R) -> Result<S, E>) -> Result<Matrix<S>, E> {
        Ok(Matrix {
            row_legs: self.row_legs.clone(),
            col_legs: self.col_legs.clone(),
            data: self.data.iter().map(f).collect::<Result<_, E>>()?,
        })
    }
}

/// `g ∘ f`.
pub fn compose_mat<R: Semiring>(f: &Matrix<R>, g: &Matrix<R>) -> Result<Matrix<R>, MatrixError> {
    f.then(g)
}

pub fn kron<R: Semiring>(f: &Matrix<R>, g: &Matrix<R>) -> Matrix<R> {
    f.kron(g)
}

pub fn dagger_mat<R: Semiring>(f: &Matrix<R>) -> Matrix<R> {
    f.dagger()
}

/// `S_m^n` on `idx`.
pub fn spider_matrix<R: Semiring>(m: usize, n: usize, idx: &IndexSet) -> Matrix<R> {
    Matrix::spider(m, n, idx.len())
}

impl<R: Semiring + fmt::Display> fmt::Display for Matrix<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in 0..self.rows() {
            write!(f, "[")?;
            for c in 0..self.cols() {
                if c > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{}", self.get(r, c))?;
            }
            writeln!(f, "]")?;
        }
        Ok(())
    }
}
