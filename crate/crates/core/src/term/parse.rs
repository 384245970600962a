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

use alloc::boxed::Box;
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;

use super::{Term, TermError};
use crate::signature::{Signature, RESERVED_PREFIX};

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    Ident(String),
    LBracket,
    RBracket,
    Comma,
    Semi,
    Star,
    Caret,
    LParen,
    RParen,
    End,
}

fn lex(text: &str) -> Result<Vec<(usize, Tok)>, TermError> {
    let mut out = Vec::new();
    let bytes = text.as_bytes();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i];
        let single = match c {
            b'[' => Some(Tok::LBracket),
            b']' => Some(Tok::RBracket),
            b',' => Some(Tok::Comma),
            b';' => Some(Tok::Semi),
            b'*' => Some(Tok::Star),
            b'^' => Some(Tok::Caret),
            b'(' => Some(Tok::LParen),
            b')' => Some(Tok::RParen),
            _ => None,
        };
        if let Some(t) = single {
            out.push((i, t));
            i += 1;
        } else if c.is_ascii_whitespace() {
            i += 1;
        } else if c.is_ascii_alphabetic() || c == b'_' {
            let start = i;
            while i < bytes.len() && (bytes[i].is_ascii_alphanumeric() || bytes[i] == b'_') {
                i += 1;
            }
            out.push((start, Tok::Ident(text[start..i].to_string())));
        } else {
            let ch = text[i..].chars().next().unwrap_or('?');
            return Err(TermError::Syntax {
                position: i,
                message: format!("unexpected character {ch:?}"),
            });
        }
    }
    out.push((text.len(), Tok::End));
    Ok(out)
}

struct Parser {
    toks: Vec<(usize, Tok)>,
    at: usize,
}

impl Parser {
    fn peek(&self) -> &Tok {
        &self.toks[self.at].1
    }

    fn pos(&self) -> usize {
        self.toks[self.at].0
    }

    fn bump(&mut self) -> Tok {
        let t = self.toks[self.at].1.clone();
        if self.at + 1 < self.toks.len() {
            self.at += 1;
        }
        t
    }

    fn error<T>(&self, message: impl Into<String>) -> Result<T, TermError> {
        Err(TermError::Syntax {
            position: self.pos(),
            message: message.into(),
        })
    }

    fn expect(&mut self, tok: Tok, what: &str) -> Result<(), TermError> {
        if *self.peek() == tok {
            self.bump();
            Ok(())
        } else {
            self.error(format!("expected {what}"))
        }
    }

    fn ident(&mut self) -> Result<String, TermError> {
        match self.peek().clone() {
            Tok::Ident(s) => {
                if s.starts_with(RESERVED_PREFIX) {
                    return Err(TermError::ReservedName(s));
                }
                self.bump();
                Ok(s)
            }
            _ => self.error("expected a name"),
        }
    }

    fn seq(&mut self) -> Result<Term, TermError> {
        let mut t = self.par()?;
        while *self.peek() == Tok::Semi {
            self.bump();
            t = Term::Seq(Box::new(t), Box::new(self.par()?));
        }
        Ok(t)
    }

    fn par(&mut self) -> Result<Term, TermError> {
        let mut t = self.postfix()?;
        while *self.peek() == Tok::Star {
            self.bump();
            t = Term::Par(Box::new(t), Box::new(self.postfix()?));
        }
        Ok(t)
    }

    fn postfix(&mut self) -> Result<Term, TermError> {
        let mut t = self.atom()?;
        while *self.peek() == Tok::Caret {
            self.bump();
            t = Term::Dag(Box::new(t));
        }
        Ok(t)
    }

    fn atom(&mut self) -> Result<Term, TermError> {
        match self.peek().clone() {
            Tok::LParen => {
                self.bump();
                let t = self.seq()?;
                self.expect(Tok::RParen, "`)`")?;
                Ok(t)
            }
            Tok::Ident(name) => {
                let is_const = matches!(
                    name.as_str(),
                    "id" | "swap" | "mu" | "eta" | "delta" | "eps" | "cap" | "cup"
                ) && self.toks[self.at + 1].1 == Tok::LBracket;
                if !is_const {
                    return Ok(Term::Gen(self.ident()?));
                }
                self.bump();
                self.bump();
                let t = match name.as_str() {
                    "id" => {
                        let mut word = Vec::new();
                        if *self.peek() != Tok::RBracket {
                            word.push(self.ident()?);
                            while *self.peek() == Tok::Comma {
                                self.bump();
                                word.push(self.ident()?);
                            }
                        }
                        Term::Id(word)
                    }
                    "swap" => {
                        let a = self.ident()?;
                        self.expect(Tok::Comma, "`,`")?;
                        Term::Swap(a, self.ident()?)
                    }
                    "mu" => Term::Mu(self.ident()?),
                    "eta" => Term::Eta(self.ident()?),
                    "delta" => Term::Delta(self.ident()?),
                    "eps" => Term::Eps(self.ident()?),
                    "cap" => Term::Cap(self.ident()?),
                    _ => Term::Cup(self.ident()?),
                };
                self.expect(Tok::RBracket, "`]`")?;
                Ok(t)
            }
            Tok::End => self.error("unexpected end of input"),
            _ => self.error("expected a term"),
        }
    }
}

/// Parses without consulting a signature.
pub fn parse_untyped(text: &str) -> Result<Term, TermError> {
    let mut p = Parser { toks: lex(text)?, at: 0 };
    let t = p.seq()?;
    if *p.peek() != Tok::End {
        return p.error("trailing input");
    }
    Ok(t)
}

/// Parses and type-checks against `sig`.
pub fn parse(text: &str, sig: &Signature) -> Result<Term, TermError> {
    let t = parse_untyped(text)?;
    t.typ(sig)?;
    Ok(t)
}
