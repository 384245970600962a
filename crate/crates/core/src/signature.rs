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

//! Monoidal (dagger-)signatures.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;

use thiserror::Error;

use crate::Word;

/// Generator names with this prefix are reserved for boxes added by
/// [`Signature::extend_with_ports`].
pub const RESERVED_PREFIX: &str = "__";

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SignatureError {
    #[error("invalid identifier {0:?}")]
    InvalidName(String),
    #[error("name {0:?} is reserved")]
    ReservedName(String),
    #[error("duplicate object {0:?}")]
    DuplicateObject(String),
    #[error("duplicate generator {0:?}")]
    DuplicateGenerator(String),
    #[error("undeclared object {object:?} in the arity of generator {generator:?}")]
    UndeclaredObject { generator: String, object: String },
    #[error("generator {generator:?} names unknown dagger partner {partner:?}")]
    UnknownDaggerPartner { generator: String, partner: String },
    #[error("dagger pairing is not an involution at {0:?}")]
    NonInvolutiveDagger(String),
    #[error("dagger partner {partner:?} of {generator:?} does not have swapped arity")]
    DaggerArityMismatch { generator: String, partner: String },
    #[error("generator {0:?} has no dagger partner in a dagger signature")]
    MissingDagger(String),
    #[error("undeclared object {0:?}")]
    UnknownObject(String),
}

/// A generator box `name : dom -> cod`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GeneratorDecl {
    pub name: String,
    pub dom: Word,
    pub cod: Word,
    pub dagger_of: Option<String>,
}

impl GeneratorDecl {
    pub fn new(name: &str, dom: &[&str], cod: &[&str]) -> Self {
        GeneratorDecl {
            name: name.to_string(),
            dom: dom.iter().map(|s| s.to_string()).collect(),
            cod: cod.iter().map(|s| s.to_string()).collect(),
            dagger_of: None,
        }
    }

    pub fn with_dagger(mut self, partner: &str) -> Self {
        self.dagger_of = Some(partner.to_string());
        self
    }
}

/// A validated signature. Immutable once built.
///
/// The dagger pairing is stored completed: if `g` names `f` as its dagger
/// partner, then `f`'s partner is `g`, whether or not the input declared both
/// directions.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Signature {
    objects: BTreeSet<String>,
    generators: BTreeMap<String, GeneratorDecl>,
    is_dagger: bool,
}

/// Names of the boundary boxes added by [`Signature::extend_with_ports`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PortBoxes {
    /// `i : I -> dom`
    pub input: String,
    /// `o : cod -> I`
    pub output: String,
}

pub fn is_identifier(s: &str) -> bool {
    let mut chars = s.chars();
    match chars.next() {
        Some(c) if c.is_ascii_alphabetic() || c == '_' => {}
        _ => return false,
    }
    chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

impl Signature {
    /// Builds a user-facing signature. Names starting with `__` are rejected.
    pub fn new<O, S>(
        objects: O,
        generators: Vec<GeneratorDecl>,
        is_dagger: bool,
    ) -> Result<Self, SignatureError>
    where
        O: IntoIterator<Item = S>,
        S: AsRef<str>,
    {
        let objects: Vec<String> = objects.into_iter().map(|s| s.as_ref().to_string()).collect();
        for name in objects.iter().chain(generators.iter().map(|g| &g.name)) {
            if name.starts_with(RESERVED_PREFIX) {
                return Err(SignatureError::ReservedName(name.clone()));
            }
        }
        Self::build(objects, generators, is_dagger)
    }

    fn build(
        objects: Vec<String>,
        generators: Vec<GeneratorDecl>,
        is_dagger: bool,
    ) -> Result<Self, SignatureError> {
        let mut object_set = BTreeSet::new();
        for obj in objects {
            if !is_identifier(&obj) {
                return Err(SignatureError::InvalidName(obj));
            }
            if !object_set.insert(obj.clone()) {
                return Err(SignatureError::DuplicateObject(obj));
            }
        }
        let mut gens: BTreeMap<String, GeneratorDecl> = BTreeMap::new();
        for g in generators {
            if !is_identifier(&g.name) {
                return Err(SignatureError::InvalidName(g.name));
            }
            for obj in g.dom.iter().chain(g.cod.iter()) {
                if !object_set.contains(obj) {
                    return Err(SignatureError::UndeclaredObject {
                        generator: g.name.clone(),
                        object: obj.clone(),
                    });
                }
            }
            if gens.contains_key(&g.name) {
                return Err(SignatureError::DuplicateGenerator(g.name));
            }
            gens.insert(g.name.clone(), g);
        }

        // Complete and check the pairing.
        let declared: Vec<(String, String)> = gens
            .values()
            .filter_map(|g| g.dagger_of.clone().map(|p| (g.name.clone(), p)))
            .collect();
        for (name, partner) in declared {
            let Some(p) = gens.get_mut(&partner) else {
                return Err(SignatureError::UnknownDaggerPartner {
                    generator: name,
                    partner,
                });
            };
            match &p.dagger_of {
                None => p.dagger_of = Some(name.clone()),
                Some(back) if *back == name => {}
                Some(_) => return Err(SignatureError::NonInvolutiveDagger(name)),
            }
        }
        for g in gens.values() {
            if let Some(partner) = &g.dagger_of {
                let p = &gens[partner];
                if p.dagger_of.as_deref() != Some(g.name.as_str()) {
                    return Err(SignatureError::NonInvolutiveDagger(g.name.clone()));
                }
                if p.dom != g.cod || p.cod != g.dom {
                    return Err(SignatureError::DaggerArityMismatch {
                        generator: g.name.clone(),
                        partner: partner.clone(),
                    });
                }
            } else if is_dagger {
                return Err(SignatureError::MissingDagger(g.name.clone()));
            }
        }
        Ok(Signature {
            objects: object_set,
            generators: gens,
            is_dagger,
        })
    }

    pub fn is_dagger(&self) -> bool {
        self.is_dagger
    }

    pub fn objects(&self) -> impl Iterator<Item = &str> {
        self.objects.iter().map(String::as_str)
    }

    pub fn has_object(&self, name: &str) -> bool {
        self.objects.contains(name)
    }

    pub fn generators(&self) -> impl Iterator<Item = &GeneratorDecl> {
        self.generators.values()
    }

    pub fn generator(&self, name: &str) -> Option<&GeneratorDecl> {
        self.generators.get(name)
    }

    /// The dagger partner of `name`, if the generator exists and is paired.
    pub fn dagger_name(&self, name: &str) -> Option<&str> {
        self.generators.get(name)?.dagger_of.as_deref()
    }

    pub fn check_word(&self, word: &[String]) -> Result<(), SignatureError> {
        match word.iter().find(|o| !self.objects.contains(*o)) {
            Some(o) => Err(SignatureError::UnknownObject(o.clone())),
            None => Ok(()),
        }
    }

    fn fresh_name(&self, base: &str) -> String {
        if !self.generators.contains_key(base) {
            return base.to_string();
        }
        (1..)
            .map(|k| format!("{base}_{k}"))
            .find(|n| !self.generators.contains_key(n))
            .expect("unbounded suffix search")
    }

    /// Adds `i : I -> dom_word` and `o : cod_word -> I` under fresh reserved
    /// names, plus their dagger partners when this is a dagger signature.
    pub fn extend_with_ports(
        &self,
        dom_word: &[String],
        cod_word: &[String],
    ) -> Result<(Signature, PortBoxes), SignatureError> {
        self.check_word(dom_word)?;
        self.check_word(cod_word)?;
        let mut ext = self.clone();
        let input = ext.fresh_name("__in");
        ext.insert_unchecked(GeneratorDecl {
            name: input.clone(),
            dom: Vec::new(),
            cod: dom_word.to_vec(),
            dagger_of: None,
        });
        let output = ext.fresh_name("__out");
        ext.insert_unchecked(GeneratorDecl {
            name: output.clone(),
            dom: cod_word.to_vec(),
            cod: Vec::new(),
            dagger_of: None,
        });
        if ext.is_dagger {
            for name in [input.clone(), output.clone()] {
                let partner = ext.fresh_name(&format!("{name}_dag"));
                let decl = ext.generators[&name].clone();
                ext.generators.get_mut(&name).unwrap().dagger_of = Some(partner.clone());
                ext.insert_unchecked(GeneratorDecl {
                    name: partner,
                    dom: decl.cod,
                    cod: decl.dom,
                    dagger_of: Some(name),
                });
            }
        }
        Ok((ext, PortBoxes { input, output }))
    }

    fn insert_unchecked(&mut self, decl: GeneratorDecl) {
        self.generators.insert(decl.name.clone(), decl);
    }
}
