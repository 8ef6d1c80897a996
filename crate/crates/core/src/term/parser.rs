use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use thiserror::Error;

use super::{ObjExpr, Term};

/// Parse failure at a byte offset of the input.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub struct SyntaxError {
    pub position: usize,
    pub expected: Vec<&'static str>,
    pub found: String,
}

impl fmt::Display for SyntaxError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "syntax error at position {}: expected {}, found {}",
            self.position,
            self.expected.join(" or "),
            self.found
        )
    }
}

const TERM_START: &[&str] = &["`id(`", "`swap(`", "`ev`", "`coev`", "`a^`", "`(`"];
const OBJ_START: &[&str] = &["`1`", "`+`", "`-`", "`(`"];

pub fn parse(input: &str) -> Result<Term, SyntaxError> {
    let mut p = Parser { src: input, pos: 0 };
    let t = p.term()?;
    p.finish(&["`;`", "`*`", "end of input"])?;
    Ok(t)
}

/// Parse a standalone object expression.
pub fn parse_object(input: &str) -> Result<ObjExpr, SyntaxError> {
    let mut p = Parser { src: input, pos: 0 };
    let o = p.object()?;
    p.finish(&["`*`", "end of input"])?;
    Ok(o)
}

struct Parser<'a> {
    src: &'a str,
    pos: usize,
}

impl<'a> Parser<'a> {
    fn rest(&self) -> &'a str {
        &self.src[self.pos..]
    }

    fn skip_ws(&mut self) {
        let trimmed = self.rest().trim_start();
        self.pos = self.src.len() - trimmed.len();
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.rest().chars().next()
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(c) {
            self.pos += c.len_utf8();
            true
        } else {
            false
        }
    }

    fn error(&mut self, expected: &[&'static str]) -> SyntaxError {
        self.skip_ws();
        let found = match self.rest().chars().next() {
            Some(c) => format!("`{c}`"),
            None => "end of input".to_string(),
        };
        SyntaxError {
            position: self.pos,
            expected: expected.to_vec(),
            found,
        }
    }

    fn expect(&mut self, c: char, label: &'static str) -> Result<(), SyntaxError> {
        if self.eat(c) {
            Ok(())
        } else {
            Err(self.error(&[label]))
        }
    }

    fn finish(&mut self, expected: &[&'static str]) -> Result<(), SyntaxError> {
        if self.peek().is_some() {
            return Err(self.error(expected));
        }
        Ok(())
    }

    fn term(&mut self) -> Result<Term, SyntaxError> {
        let mut t = self.par_term()?;
        while self.eat(';') {
            let rhs = self.par_term()?;
            t = Term::seq(t, rhs);
        }
        Ok(t)
    }

    fn par_term(&mut self) -> Result<Term, SyntaxError> {
        let mut t = self.atom_term()?;
        while self.eat('*') {
            let rhs = self.atom_term()?;
            t = Term::par(t, rhs);
        }
        Ok(t)
    }

    fn atom_term(&mut self) -> Result<Term, SyntaxError> {
        if self.eat('(') {
            let t = self.term()?;
            self.expect(')', "`)`")?;
            return Ok(t);
        }
        self.skip_ws();
        let start = self.pos;
        let word_len = self
            .rest()
            .find(|c: char| !c.is_ascii_alphabetic())
            .unwrap_or(self.rest().len());
        let word = &self.rest()[..word_len];
        let keyword_error = |p: &mut Self| {
            p.pos = start;
            p.error(TERM_START)
        };
        match word {
            "id" => {
                self.pos += word_len;
                self.expect('(', "`(`")?;
                let o = self.object()?;
                self.expect(')', "`)`")?;
                Ok(Term::Id(o))
            }
            "swap" => {
                self.pos += word_len;
                self.expect('(', "`(`")?;
                let a = self.object()?;
                self.expect(',', "`,`")?;
                let b = self.object()?;
                self.expect(')', "`)`")?;
                Ok(Term::Swap(a, b))
            }
            "ev" => {
                self.pos += word_len;
                Ok(Term::Ev)
            }
            "coev" => {
                self.pos += word_len;
                Ok(Term::Coev)
            }
            "a" => {
                self.pos += word_len;
                self.expect('^', "`^`")?;
                let k = self.integer()?;
                Ok(Term::Alpha(k))
            }
            _ => Err(keyword_error(self)),
        }
    }

    fn integer(&mut self) -> Result<BigInt, SyntaxError> {
        let negative = self.eat('-');
        self.skip_ws();
        let digits_len = self
            .rest()
            .find(|c: char| !c.is_ascii_digit())
            .unwrap_or(self.rest().len());
        if digits_len == 0 {
            return Err(self.error(&["digit"]));
        }
        let digits = &self.rest()[..digits_len];
        let mut k = BigInt::from_str(digits).expect("ascii digits");
        if negative {
            k = -k;
        }
        self.pos += digits_len;
        Ok(k)
    }

    fn object(&mut self) -> Result<ObjExpr, SyntaxError> {
        let mut o = self.atom_object()?;
        while self.eat('*') {
            let rhs = self.atom_object()?;
            o = ObjExpr::tensor(o, rhs);
        }
        Ok(o)
    }

    fn atom_object(&mut self) -> Result<ObjExpr, SyntaxError> {
        match self.peek() {
            Some('1') => {
                self.pos += 1;
                Ok(ObjExpr::Unit)
            }
            Some('+') => {
                self.pos += 1;
                Ok(ObjExpr::Plus)
            }
            Some('-') => {
                self.pos += 1;
                Ok(ObjExpr::Minus)
            }
            Some('(') => {
                self.pos += 1;
                let o = self.object()?;
                self.expect(')', "`)`")?;
                Ok(o)
            }
            _ => Err(self.error(OBJ_START)),
        }
    }
}
