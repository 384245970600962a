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

//! String-diagram expressions over a signature.
//!
//! `;` composes left to right, `*` is the tensor product and postfix `^` is
//! the dagger. `^` binds tightest, then `*`, then `;`.

mod expand;
mod parse;

use alloc::boxed::Box;
use alloc::string::{String, ToString};
use core::fmt;

use thiserror::Error;

use crate::diagram::{DiagramError, DotDiagram, GeneratorKind, MorphismClass};
use crate::signature::Signature;
use crate::Word;

pub use expand::{expand, permutation_term, spider_term};
pub use parse::{parse, parse_untyped};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TermError {
    #[error("syntax error at byte {position}: {message}")]
    Syntax { position: usize, message: String },
    #[error("unknown generator {0:?}")]
    UnknownGenerator(String),
    #[error("unknown object {0:?}")]
    UnknownObject(String),
    #[error("names starting with `__` are reserved: {0:?}")]
    ReservedName(String),
    #[error("cannot compose: codomain {cod:?} does not match domain {dom:?}")]
    TypeMismatch { cod: Word, dom: Word },
    #[error("generator {0:?} has no dagger in this signature")]
    NoDagger(String),
}

impl From<DiagramError> for TermError {
    fn from(e: DiagramError) -> Self {
        match e {
            DiagramError::UnknownGenerator(g) => TermError::UnknownGenerator(g),
            DiagramError::UnknownObject(o) => TermError::UnknownObject(o),
            DiagramError::TypeMismatch { cod, dom } => TermError::TypeMismatch { cod, dom },
            DiagramError::NoDagger(g) => TermError::NoDagger(g),
            other => TermError::Syntax {
                position: 0,
                message: other.to_string(),
            },
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Term {
    Gen(String),
    Id(Word),
    Swap(String, String),
    Mu(String),
    Eta(String),
    Delta(String),
    Eps(String),
    /// `η ; δ`
    Cap(String),
    /// `μ ; ε`
    Cup(String),
    Seq(Box<Term>, Box<Term>),
    Par(Box<Term>, Box<Term>),
    Dag(Box<Term>),
}

impl Term {
    pub fn gen(name: &str) -> Term {
        Term::Gen(name.to_string())
    }

    pub fn id(word: &[&str]) -> Term {
        Term::Id(word.iter().map(|s| s.to_string()).collect())
    }

    pub fn then(self, next: Term) -> Term {
        Term::Seq(Box::new(self), Box::new(next))
    }

    pub fn par(self, other: Term) -> Term {
        Term::Par(Box::new(self), Box::new(other))
    }

    pub fn dag(self) -> Term {
        Term::Dag(Box::new(self))
    }

    /// Left-nested composite of a non-empty list.
    pub fn seq_all(terms: impl IntoIterator<Item = Term>) -> Option<Term> {
        terms.into_iter().reduce(Term::then)
    }

    pub fn par_all(terms: impl IntoIterator<Item = Term>) -> Option<Term> {
        terms.into_iter().reduce(Term::par)
    }

    /// Number of syntax nodes.
    pub fn size(&self) -> usize {
        match self {
            Term::Seq(a, b) | Term::Par(a, b) => 1 + a.size() + b.size(),
            Term::Dag(a) => 1 + a.size(),
            _ => 1,
        }
    }

    /// True when the term mentions no signature generator.
    pub fn is_scfa_only(&self) -> bool {
        match self {
            Term::Gen(_) => false,
            Term::Seq(a, b) | Term::Par(a, b) => a.is_scfa_only() && b.is_scfa_only(),
            Term::Dag(a) => a.is_scfa_only(),
            _ => true,
        }
    }

    /// Domain and codomain, checked bottom-up.
    pub fn typ(&self, sig: &Signature) -> Result<(Word, Word), TermError> {
        let obj = |a: &String| -> Result<(), TermError> {
            if sig.has_object(a) {
                Ok(())
            } else {
                Err(TermError::UnknownObject(a.clone()))
            }
        };
        let w = |n: usize, a: &String| -> Word { (0..n).map(|_| a.clone()).collect() };
        match self {
            Term::Gen(name) => {
                let decl = sig
                    .generator(name)
                    .ok_or_else(|| TermError::UnknownGenerator(name.clone()))?;
                Ok((decl.dom.clone(), decl.cod.clone()))
            }
            Term::Id(word) => {
                for a in word {
                    obj(a)?;
                }
                Ok((word.clone(), word.clone()))
            }
            Term::Swap(a, b) => {
                obj(a)?;
                obj(b)?;
                Ok((alloc::vec![a.clone(), b.clone()], alloc::vec![b.clone(), a.clone()]))
            }
            Term::Mu(a) => obj(a).map(|_| (w(2, a), w(1, a))),
            Term::Eta(a) => obj(a).map(|_| (w(0, a), w(1, a))),
            Term::Delta(a) => obj(a).map(|_| (w(1, a), w(2, a))),
            Term::Eps(a) => obj(a).map(|_| (w(1, a), w(0, a))),
            Term::Cap(a) => obj(a).map(|_| (w(0, a), w(2, a))),
            Term::Cup(a) => obj(a).map(|_| (w(2, a), w(0, a))),
            Term::Seq(s, t) => {
                let (d1, c1) = s.typ(sig)?;
                let (d2, c2) = t.typ(sig)?;
                if c1 != d2 {
                    return Err(TermError::TypeMismatch { cod: c1, dom: d2 });
                }
                Ok((d1, c2))
            }
            Term::Par(s, t) => {
                let (mut d1, mut c1) = s.typ(sig)?;
                let (d2, c2) = t.typ(sig)?;
                d1.extend(d2);
                c1.extend(c2);
                Ok((d1, c1))
            }
            Term::Dag(s) => {
                s.check_daggerable(sig)?;
                let (d, c) = s.typ(sig)?;
                Ok((c, d))
            }
        }
    }

    fn check_daggerable(&self, sig: &Signature) -> Result<(), TermError> {
        match self {
            Term::Gen(name) => match sig.dagger_name(name) {
                Some(_) => Ok(()),
                None => Err(TermError::NoDagger(name.clone())),
            },
            Term::Seq(a, b) | Term::Par(a, b) => {
                a.check_daggerable(sig)?;
                b.check_daggerable(sig)
            }
            Term::Dag(a) => a.check_daggerable(sig),
            _ => Ok(()),
        }
    }

    pub fn dom(&self, sig: &Signature) -> Result<Word, TermError> {
        self.typ(sig).map(|t| t.0)
    }

    pub fn cod(&self, sig: &Signature) -> Result<Word, TermError> {
        self.typ(sig).map(|t| t.1)
    }

    /// Interprets the term as a dot-diagram, structurally.
    pub fn to_diagram(&self, sig: &Signature) -> Result<DotDiagram, TermError> {
        let g = |k: GeneratorKind| DotDiagram::generator(&k, sig).map_err(TermError::from);
        match self {
            Term::Gen(name) => g(GeneratorKind::Box(name.clone())),
            Term::Id(word) => {
                for a in word {
                    if !sig.has_object(a) {
                        return Err(TermError::UnknownObject(a.clone()));
                    }
                }
                Ok(DotDiagram::identity(word))
            }
            Term::Swap(a, b) => g(GeneratorKind::Swap(a.clone(), b.clone())),
            Term::Mu(a) => g(GeneratorKind::Mu(a.clone())),
            Term::Eta(a) => g(GeneratorKind::Eta(a.clone())),
            Term::Delta(a) => g(GeneratorKind::Delta(a.clone())),
            Term::Eps(a) => g(GeneratorKind::Epsilon(a.clone())),
            Term::Cap(a) => Ok(g(GeneratorKind::Eta(a.clone()))?.compose(&g(GeneratorKind::Delta(a.clone()))?)?),
            Term::Cup(a) => Ok(g(GeneratorKind::Mu(a.clone()))?.compose(&g(GeneratorKind::Epsilon(a.clone()))?)?),
            Term::Seq(s, t) => Ok(s.to_diagram(sig)?.compose(&t.to_diagram(sig)?)?),
            Term::Par(s, t) => Ok(s.to_diagram(sig)?.tensor(&t.to_diagram(sig)?)),
            Term::Dag(s) => Ok(s.to_diagram(sig)?.dagger(sig)?),
        }
    }
}

/// The morphism of the free hypergraph category denoted by `t`. Connected
/// SCFA components fuse into single dots during composition.
pub fn elaborate(t: &Term, sig: &Signature) -> Result<MorphismClass, TermError> {
    t.to_diagram(sig).map(MorphismClass::new)
}

fn fmt_word(f: &mut fmt::Formatter<'_>, word: &[String]) -> fmt::Result {
    for (k, a) in word.iter().enumerate() {
        if k > 0 {
            write!(f, ",")?;
        }
        write!(f, "{a}")?;
    }
    Ok(())
}

impl Term {
    fn fmt_prec(&self, f: &mut fmt::Formatter<'_>, prec: u8) -> fmt::Result {
        // 0: sequence position, 1: tensor operand, 2: dagger operand
        match self {
            Term::Gen(n) => write!(f, "{n}"),
            Term::Id(w) => {
                write!(f, "id[")?;
                fmt_word(f, w)?;
                write!(f, "]")
            }
            Term::Swap(a, b) => write!(f, "swap[{a},{b}]"),
            Term::Mu(a) => write!(f, "mu[{a}]"),
            Term::Eta(a) => write!(f, "eta[{a}]"),
            Term::Delta(a) => write!(f, "delta[{a}]"),
            Term::Eps(a) => write!(f, "eps[{a}]"),
            Term::Cap(a) => write!(f, "cap[{a}]"),
            Term::Cup(a) => write!(f, "cup[{a}]"),
            Term::Seq(s, t) => {
                if prec > 0 {
                    write!(f, "(")?;
                }
                s.fmt_prec(f, 0)?;
                write!(f, " ; ")?;
                t.fmt_prec(f, 1)?;
                if prec > 0 {
                    write!(f, ")")?;
                }
                Ok(())
            }
            Term::Par(s, t) => {
                if prec > 1 {
                    write!(f, "(")?;
                }
                s.fmt_prec(f, 1)?;
                write!(f, " * ")?;
                t.fmt_prec(f, 2)?;
                if prec > 1 {
                    write!(f, ")")?;
                }
                Ok(())
            }
            Term::Dag(s) => {
                s.fmt_prec(f, 2)?;
                write!(f, "^")
            }
        }
    }
}

impl fmt::Display for Term {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.fmt_prec(f, 0)
    }
}

#[cfg(test)]
mod tests;
