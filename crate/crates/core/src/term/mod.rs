//! Terms for the free symmetric monoidal category with duals on one positive
//! point `+` carrying an automorphism `a`.
//!
//! Concrete syntax:
//!
//! ```text
//! obj  := "1" | "+" | "-" | obj "*" obj | "(" obj ")"
//! term := "id(" obj ")" | "swap(" obj "," obj ")" | "ev" | "coev" | "a^" int
//!       | term "*" term | term ";" term | "(" term ")"
//! int  := ["-"] digit+
//! ```
//!
//! `;` is diagrammatic composition, `*` is tensor and binds tighter than `;`;
//! both associate to the left. `ev : (-,+) -> 1`, `coev : 1 -> (+,-)` and
//! `a^k : + -> +`.

mod denote;
mod parser;

use std::fmt;

use thiserror::Error;

use crate::object::{BoundaryObject, Sign};
use crate::Label;

pub use denote::{denote, quote};
pub use parser::{parse, parse_object, SyntaxError};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum ObjExpr {
    Unit,
    Plus,
    Minus,
    Tensor(Box<ObjExpr>, Box<ObjExpr>),
}

impl ObjExpr {
    pub fn tensor(a: ObjExpr, b: ObjExpr) -> Self {
        ObjExpr::Tensor(Box::new(a), Box::new(b))
    }

    pub fn flatten(&self) -> BoundaryObject {
        let mut signs = Vec::new();
        self.push_signs(&mut signs);
        BoundaryObject::new(signs)
    }

    fn push_signs(&self, out: &mut Vec<Sign>) {
        match self {
            ObjExpr::Unit => {}
            ObjExpr::Plus => out.push(Sign::Plus),
            ObjExpr::Minus => out.push(Sign::Minus),
            ObjExpr::Tensor(a, b) => {
                a.push_signs(out);
                b.push_signs(out);
            }
        }
    }

    /// Left-nested expression for a word; the empty word becomes `1`.
    pub fn from_word(word: &BoundaryObject) -> Self {
        let mut letters = word.signs().iter().map(|s| match s {
            Sign::Plus => ObjExpr::Plus,
            Sign::Minus => ObjExpr::Minus,
        });
        match letters.next() {
            None => ObjExpr::Unit,
            Some(first) => letters.fold(first, ObjExpr::tensor),
        }
    }

    /// Judgemental equality: equal flattenings.
    pub fn equivalent(&self, other: &ObjExpr) -> bool {
        self.flatten() == other.flatten()
    }
}

impl fmt::Display for ObjExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ObjExpr::Unit => f.write_str("1"),
            ObjExpr::Plus => f.write_str("+"),
            ObjExpr::Minus => f.write_str("-"),
            ObjExpr::Tensor(a, b) => {
                write!(f, "{a} * ")?;
                if matches!(**b, ObjExpr::Tensor(..)) {
                    write!(f, "({b})")
                } else {
                    write!(f, "{b}")
                }
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Term {
    Id(ObjExpr),
    Swap(ObjExpr, ObjExpr),
    Ev,
    Coev,
    Alpha(Label),
    Seq(Box<Term>, Box<Term>),
    Par(Box<Term>, Box<Term>),
}

impl Term {
    pub fn seq(f: Term, g: Term) -> Self {
        Term::Seq(Box::new(f), Box::new(g))
    }

    pub fn par(f: Term, g: Term) -> Self {
        Term::Par(Box::new(f), Box::new(g))
    }

    pub fn alpha(k: impl Into<Label>) -> Self {
        Term::Alpha(k.into())
    }

    pub fn id_word(word: &BoundaryObject) -> Self {
        Term::Id(ObjExpr::from_word(word))
    }

    /// Left-nested `;` chain; `None` for an empty sequence.
    pub fn seq_all(terms: impl IntoIterator<Item = Term>) -> Option<Term> {
        terms.into_iter().reduce(Term::seq)
    }

    /// Left-nested `*` chain; `None` for an empty sequence.
    pub fn par_all(terms: impl IntoIterator<Item = Term>) -> Option<Term> {
        terms.into_iter().reduce(Term::par)
    }

    /// Number of nodes in the syntax tree.
    pub fn size(&self) -> usize {
        match self {
            Term::Seq(f, g) | Term::Par(f, g) => 1 + f.size() + g.size(),
            _ => 1,
        }
    }

    /// Infer `(domain, codomain)`.
    pub fn typecheck(&self) -> Result<(BoundaryObject, BoundaryObject), TypeError> {
        match self {
            Term::Id(o) => {
                let w = o.flatten();
                Ok((w.clone(), w))
            }
            Term::Swap(a, b) => {
                let (a, b) = (a.flatten(), b.flatten());
                Ok((a.tensor(&b), b.tensor(&a)))
            }
            Term::Ev => Ok((
                BoundaryObject::new(vec![Sign::Minus, Sign::Plus]),
                BoundaryObject::unit(),
            )),
            Term::Coev => Ok((
                BoundaryObject::unit(),
                BoundaryObject::new(vec![Sign::Plus, Sign::Minus]),
            )),
            Term::Alpha(_) => Ok((BoundaryObject::plus(), BoundaryObject::plus())),
            Term::Seq(f, g) => {
                let (fd, fc) = f.typecheck()?;
                let (gd, gc) = g.typecheck()?;
                if fc != gd {
                    return Err(TypeError {
                        subterm: self.to_string(),
                        left: fc,
                        right: gd,
                    });
                }
                Ok((fd, gc))
            }
            Term::Par(f, g) => {
                let (fd, fc) = f.typecheck()?;
                let (gd, gc) = g.typecheck()?;
                Ok((fd.tensor(&gd), fc.tensor(&gc)))
            }
        }
    }
}

/// Canonical printer; `parse` inverts it exactly.
impl fmt::Display for Term {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Term::Id(o) => write!(f, "id({o})"),
            Term::Swap(a, b) => write!(f, "swap({a}, {b})"),
            Term::Ev => f.write_str("ev"),
            Term::Coev => f.write_str("coev"),
            Term::Alpha(k) => write!(f, "a^{k}"),
            Term::Seq(a, b) => {
                write!(f, "{a} ; ")?;
                if matches!(**b, Term::Seq(..)) {
                    write!(f, "({b})")
                } else {
                    write!(f, "{b}")
                }
            }
            Term::Par(a, b) => {
                if matches!(**a, Term::Seq(..)) {
                    write!(f, "({a}) * ")?;
                } else {
                    write!(f, "{a} * ")?;
                }
                if matches!(**b, Term::Seq(..) | Term::Par(..)) {
                    write!(f, "({b})")
                } else {
                    write!(f, "{b}")
                }
            }
        }
    }
}

/// A `;` whose sides disagree on the boundary between them.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
#[error("type error in `{subterm}`: codomain `{left}` does not match domain `{right}`")]
pub struct TypeError {
    pub subterm: String,
    pub left: BoundaryObject,
    pub right: BoundaryObject,
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum TermError {
    #[error(transparent)]
    Syntax(#[from] SyntaxError),
    #[error(transparent)]
    Type(#[from] TypeError),
}

/// Parse and denote in one step.
pub fn normalize(input: &str) -> Result<crate::Bordism, TermError> {
    let t = parse(input)?;
    Ok(denote(&t)?)
}
