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

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use super::{encode, IndexSet, Matrix, MatrixError};
use crate::diagram::DotDiagram;
use crate::semiring::Semiring;
use crate::signature::{GeneratorDecl, Signature};
use crate::term::Term;

/// A hypergraph functor into matrices: an index set per object and a matrix
/// per generator. Rows follow the codomain word, columns the domain word.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Model<R> {
    objects: BTreeMap<String, IndexSet>,
    generators: BTreeMap<String, Matrix<R>>,
}

impl<R: Semiring> Default for Model<R> {
    fn default() -> Self {
        Self::new()
    }
}

impl<R: Semiring> Model<R> {
    pub fn new() -> Self {
        Model {
            objects: BTreeMap::new(),
            generators: BTreeMap::new(),
        }
    }

    /// Assigns `sizes(A)` indices to every object and fills each generator
    /// `f : w -> v` with `entry(f, row, col)`.
    pub fn from_fn(
        sig: &Signature,
        mut sizes: impl FnMut(&str) -> usize,
        mut entry: impl FnMut(&GeneratorDecl, &[usize], &[usize]) -> R,
    ) -> Self {
        let mut model = Self::new();
        for a in sig.objects() {
            model.set_object(a, IndexSet::of_size(sizes(a)));
        }
        for decl in sig.generators() {
            let rows = model.legs(&decl.cod).expect("objects assigned above");
            let cols = model.legs(&decl.dom).expect("objects assigned above");
            let m = Matrix::from_fn(rows, cols, |r, c| entry(decl, r, c));
            model.set_generator(&decl.name, m);
        }
        model
    }

    pub fn with_object(mut self, name: &str, set: IndexSet) -> Self {
        self.set_object(name, set);
        self
    }

    pub fn with_generator(mut self, name: &str, m: Matrix<R>) -> Self {
        self.set_generator(name, m);
        self
    }

    pub fn set_object(&mut self, name: &str, set: IndexSet) {
        self.objects.insert(name.into(), set);
    }

    pub fn set_generator(&mut self, name: &str, m: Matrix<R>) {
        self.generators.insert(name.into(), m);
    }

    pub fn objects(&self) -> &BTreeMap<String, IndexSet> {
        &self.objects
    }

    pub fn generators(&self) -> &BTreeMap<String, Matrix<R>> {
        &self.generators
    }

    pub fn object(&self, name: &str) -> Option<&IndexSet> {
        self.objects.get(name)
    }

    pub fn generator(&self, name: &str) -> Option<&Matrix<R>> {
        self.generators.get(name)
    }

    pub fn size(&self, object: &str) -> Result<usize, MatrixError> {
        self.objects
            .get(object)
            .map(IndexSet::len)
            .ok_or_else(|| MatrixError::UnknownObject(object.into()))
    }

    pub fn legs(&self, word: &[String]) -> Result<Vec<usize>, MatrixError> {
        word.iter().map(|a| self.size(a)).collect()
    }

    fn gen(&self, name: &str) -> Result<&Matrix<R>, MatrixError> {
        self.generators
            .get(name)
            .ok_or_else(|| MatrixError::UnknownGenerator(name.into()))
    }

    /// Checks that every object and generator of `sig` is interpreted with
    /// the right shape, and, if asked, that daggers are conjugate transposes.
    pub fn validate(&self, sig: &Signature, require_dagger: bool) -> Result<(), MatrixError> {
        for a in sig.objects() {
            self.size(a)?;
        }
        for decl in sig.generators() {
            let m = self.gen(&decl.name)?;
            let expected = (self.legs(&decl.cod)?, self.legs(&decl.dom)?);
            if m.row_legs() != expected.0.as_slice() || m.col_legs() != expected.1.as_slice() {
                return Err(MatrixError::GeneratorShape {
                    name: decl.name.clone(),
                    expected,
                    found: (m.row_legs().to_vec(), m.col_legs().to_vec()),
                });
            }
            if require_dagger {
                let partner = sig
                    .dagger_name(&decl.name)
                    .ok_or_else(|| MatrixError::NoDagger(decl.name.clone()))?;
                if *self.gen(partner)? != m.dagger() {
                    return Err(MatrixError::DaggerIncompatible(decl.name.clone()));
                }
            }
        }
        Ok(())
    }

    pub fn map<S: Semiring>(&self, mut f: impl FnMut(&R) -> S) -> Model<S> {
        Model {
            objects: self.objects.clone(),
            generators: self
                .generators
                .iter()
                .map(|(k, m)| (k.clone(), m.map(&mut f)))
                .collect(),
        }
    }

    pub fn map_result<S: Semiring, E>(&self, mut f: impl FnMut(&R) -> Result<S, E>) -> Result<Model<S>, E> {
        let mut generators = BTreeMap::new();
        for (k, m) in &self.generators {
            generators.insert(k.clone(), m.map_result(&mut f)?);
        }
        Ok(Model {
            objects: self.objects.clone(),
            generators,
        })
    }

    /// Evaluates a term by structural recursion: `;` is matrix product, `*`
    /// is the Kronecker product, `^` the conjugate transpose.
    pub fn eval_term(&self, t: &Term) -> Result<Matrix<R>, MatrixError> {
        let spider = |m: usize, n: usize, a: &str| -> Result<Matrix<R>, MatrixError> {
            Ok(Matrix::spider(m, n, self.size(a)?))
        };
        match t {
            Term::Gen(name) => Ok(self.gen(name)?.clone()),
            Term::Id(word) => Ok(Matrix::identity(self.legs(word)?)),
            Term::Swap(a, b) => Ok(Matrix::swap(self.size(a)?, self.size(b)?)),
            Term::Mu(a) => spider(2, 1, a),
            Term::Eta(a) => spider(0, 1, a),
            Term::Delta(a) => spider(1, 2, a),
            Term::Eps(a) => spider(1, 0, a),
            Term::Cap(a) => spider(0, 1, a)?.then(&spider(1, 2, a)?),
            Term::Cup(a) => spider(2, 1, a)?.then(&spider(1, 0, a)?),
            Term::Seq(s, u) => self.eval_term(s)?.then(&self.eval_term(u)?),
            Term::Par(s, u) => Ok(self.eval_term(s)?.kron(&self.eval_term(u)?)),
            Term::Dag(s) => Ok(self.eval_term(s)?.dagger()),
        }
    }

    /// Sums, over every assignment of an index to each dot, the product of
    /// the generator entries those indices select. Boundary dots index the
    /// rows (codomain) and columns (domain) of the result; a dot touching
    /// nothing contributes the size of its index set.
    pub fn eval_contraction(&self, d: &DotDiagram) -> Result<Matrix<R>, MatrixError> {
        let sizes: Vec<usize> = d.dots().iter().map(|a| self.size(a)).collect::<Result<_, _>>()?;
        let mut mats = Vec::with_capacity(d.num_boxes());
        for b in d.boxes() {
            let m = self.gen(&b.label)?;
            let rows: Vec<usize> = b.outputs.iter().map(|&x| sizes[x]).collect();
            let cols: Vec<usize> = b.inputs.iter().map(|&x| sizes[x]).collect();
            if m.row_legs() != rows.as_slice() || m.col_legs() != cols.as_slice() {
                return Err(MatrixError::GeneratorShape {
                    name: b.label.clone(),
                    expected: (rows, cols),
                    found: (m.row_legs().to_vec(), m.col_legs().to_vec()),
                });
            }
            mats.push(m);
        }

        // Visit dots box by box so that each box can be scored as soon as all
        // of its dots carry an index.
        let mut order = Vec::with_capacity(sizes.len());
        let mut seen = vec![false; sizes.len()];
        for b in d.boxes() {
            for &x in b.inputs.iter().chain(&b.outputs) {
                if !seen[x] {
                    seen[x] = true;
                    order.push(x);
                }
            }
        }
        order.extend((0..sizes.len()).filter(|&x| !seen[x]));
        let mut position = vec![0; sizes.len()];
        for (k, &x) in order.iter().enumerate() {
            position[x] = k;
        }
        let mut ready: Vec<Vec<usize>> = vec![Vec::new(); order.len()];
        let mut constant = R::one();
        for (i, b) in d.boxes().iter().enumerate() {
            match b.inputs.iter().chain(&b.outputs).map(|&x| position[x]).max() {
                Some(level) => ready[level].push(i),
                None => constant = constant.times(mats[i].get(0, 0)),
            }
        }

        let row_legs: Vec<usize> = d.outputs().iter().map(|&x| sizes[x]).collect();
        let col_legs: Vec<usize> = d.inputs().iter().map(|&x| sizes[x]).collect();
        let mut job = Contraction {
            d,
            mats: &mats,
            sizes: &sizes,
            order: &order,
            ready: &ready,
            phi: vec![0; sizes.len()],
            result: Matrix::zeros(row_legs, col_legs),
        };
        if !constant.is_zero() {
            job.run(0, constant);
        }
        Ok(job.result)
    }

    /// Pointwise Kronecker product of two models of the same signature.
    /// Index `x` of `P(A)` stands for the pair `(x / |N(A)|, x % |N(A)|)`.
    pub fn product(&self, other: &Model<R>) -> Result<Model<R>, MatrixError> {
        if !self.objects.keys().eq(other.objects.keys()) || !self.generators.keys().eq(other.generators.keys()) {
            return Err(MatrixError::IncompatibleModels);
        }
        let mut out = Model::new();
        for (name, m) in &self.objects {
            let n = &other.objects[name];
            let mut labels = Vec::with_capacity(m.len() * n.len());
            for a in m.labels() {
                for b in n.labels() {
                    labels.push(format!("({a},{b})"));
                }
            }
            out.set_object(name, IndexSet::from_labels(labels));
        }
        for (name, m) in &self.generators {
            let n = &other.generators[name];
            if m.row_legs().len() != n.row_legs().len() || m.col_legs().len() != n.col_legs().len() {
                return Err(MatrixError::IncompatibleModels);
            }
            let split = |idx: &[usize], nl: &[usize]| -> (Vec<usize>, Vec<usize>) {
                idx.iter().zip(nl).map(|(&x, &k)| (x / k, x % k)).unzip()
            };
            let rows: Vec<usize> = m.row_legs().iter().zip(n.row_legs()).map(|(a, b)| a * b).collect();
            let cols: Vec<usize> = m.col_legs().iter().zip(n.col_legs()).map(|(a, b)| a * b).collect();
            let p = Matrix::from_fn(rows, cols, |r, c| {
                let (rm, rn) = split(r, n.row_legs());
                let (cm, cn) = split(c, n.col_legs());
                m.get_multi(&rm, &cm).times(n.get_multi(&rn, &cn))
            });
            out.set_generator(name, p);
        }
        Ok(out)
    }

    /// Adds one index, labelled `label`, to `object`. Every generator entry
    /// that selects the new index is zero.
    pub fn with_extra_index(&self, sig: &Signature, object: &str, label: &str) -> Result<Model<R>, MatrixError> {
        let old = self.size(object)?;
        let mut out = self.clone();
        let mut set = self.objects[object].clone();
        set.push(label.into());
        out.set_object(object, set);
        for decl in sig.generators() {
            let m = self.gen(&decl.name)?;
            let grow = |word: &[String], legs: &[usize]| -> Vec<usize> {
                word.iter()
                    .zip(legs)
                    .map(|(a, &n)| if a == object { n + 1 } else { n })
                    .collect()
            };
            let rows = grow(&decl.cod, m.row_legs());
            let cols = grow(&decl.dom, m.col_legs());
            let hits = |word: &[String], idx: &[usize]| word.iter().zip(idx).any(|(a, &i)| a == object && i == old);
            let p = Matrix::from_fn(rows, cols, |r, c| {
                if hits(&decl.cod, r) || hits(&decl.dom, c) {
                    R::zero()
                } else {
                    m.get_multi(r, c).clone()
                }
            });
            out.set_generator(&decl.name, p);
        }
        Ok(out)
    }
}

struct Contraction<'a, R> {
    d: &'a DotDiagram,
    mats: &'a [&'a Matrix<R>],
    sizes: &'a [usize],
    order: &'a [usize],
    ready: &'a [Vec<usize>],
    phi: Vec<usize>,
    result: Matrix<R>,
}

impl<R: Semiring> Contraction<'_, R> {
    fn run(&mut self, level: usize, partial: R) {
        if level == self.order.len() {
            let row: Vec<usize> = self.d.outputs().iter().map(|&x| self.phi[x]).collect();
            let col: Vec<usize> = self.d.inputs().iter().map(|&x| self.phi[x]).collect();
            let r = encode(&row, self.result.row_legs());
            let c = encode(&col, self.result.col_legs());
            self.result.add_at(r, c, &partial);
            return;
        }
        let dot = self.order[level];
        'values: for v in 0..self.sizes[dot] {
            self.phi[dot] = v;
            let mut p = partial.clone();
            for &b in &self.ready[level] {
                let node = &self.d.boxes()[b];
                let row: Vec<usize> = node.outputs.iter().map(|&x| self.phi[x]).collect();
                let col: Vec<usize> = node.inputs.iter().map(|&x| self.phi[x]).collect();
                let e = self.mats[b].get_multi(&row, &col);
                if e.is_zero() {
                    continue 'values;
                }
                p = p.times(e);
            }
            self.run(level + 1, p);
        }
    }
}

/// `⟦t⟧` computed term-structurally.
pub fn eval_compositional<R: Semiring>(model: &Model<R>, t: &Term) -> Result<Matrix<R>, MatrixError> {
    model.eval_term(t)
}

/// `⟦d⟧` computed by summing over indexing functions.
pub fn eval_contraction<R: Semiring>(model: &Model<R>, d: &DotDiagram) -> Result<Matrix<R>, MatrixError> {
    model.eval_contraction(d)
}

pub fn product_model<R: Semiring>(m: &Model<R>, n: &Model<R>) -> Result<Model<R>, MatrixError> {
    m.product(n)
}

impl Model<crate::semiring::GaussianRational> {
    /// True when every generator entry has zero imaginary part.
    pub fn data_is_real(&self) -> bool {
        self.generators.values().all(|m| m.data().iter().all(|x| x.is_real()))
    }
}
