//! Oriented 0-manifolds: finite words over `{+, -}`.

use std::fmt;
use std::ops::Index;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn flip(self) -> Sign {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        }
    }

    pub fn as_char(self) -> char {
        match self {
            Sign::Plus => '+',
            Sign::Minus => '-',
        }
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.as_char())
    }
}

/// A boundary object of a bordism. The empty word is the monoidal unit and
/// tensor is concatenation.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BoundaryObject {
    signs: Vec<Sign>,
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
#[error("invalid boundary word `{0}`: expected a string over `+-`, or `1` for the empty word")]
pub struct WordParseError(pub String);

impl BoundaryObject {
    pub fn new(signs: Vec<Sign>) -> Self {
        Self { signs }
    }

    /// The empty word.
    pub fn unit() -> Self {
        Self::default()
    }

    pub fn plus() -> Self {
        Self::new(vec![Sign::Plus])
    }

    pub fn minus() -> Self {
        Self::new(vec![Sign::Minus])
    }

    /// `n` positive points.
    pub fn plus_power(n: usize) -> Self {
        Self::new(vec![Sign::Plus; n])
    }

    pub fn len(&self) -> usize {
        self.signs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.signs.is_empty()
    }

    pub fn signs(&self) -> &[Sign] {
        &self.signs
    }

    pub fn tensor(&self, other: &BoundaryObject) -> BoundaryObject {
        let mut signs = self.signs.clone();
        signs.extend_from_slice(&other.signs);
        Self { signs }
    }

    /// Reverse the word and flip every sign. This is an involution.
    pub fn dual(&self) -> BoundaryObject {
        Self {
            signs: self.signs.iter().rev().map(|s| s.flip()).collect(),
        }
    }

    /// Signed point count `#plus - #minus`, preserved by every bordism
    /// in the sense that source and target of a bordism have equal charge.
    pub fn charge(&self) -> isize {
        self.signs
            .iter()
            .map(|s| match s {
                Sign::Plus => 1,
                Sign::Minus => -1,
            })
            .sum()
    }

    pub fn split_at(&self, mid: usize) -> (BoundaryObject, BoundaryObject) {
        let (a, b) = self.signs.split_at(mid);
        (Self::new(a.to_vec()), Self::new(b.to_vec()))
    }
}

impl Index<usize> for BoundaryObject {
    type Output = Sign;

    fn index(&self, i: usize) -> &Sign {
        &self.signs[i]
    }
}

impl FromIterator<Sign> for BoundaryObject {
    fn from_iter<I: IntoIterator<Item = Sign>>(iter: I) -> Self {
        Self::new(iter.into_iter().collect())
    }
}

/// The word as a string over `+-`; the empty word prints as `1`.
impl fmt::Display for BoundaryObject {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.signs.is_empty() {
            return f.write_str("1");
        }
        for s in &self.signs {
            write!(f, "{s}")?;
        }
        Ok(())
    }
}

impl FromStr for BoundaryObject {
    type Err = WordParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let t = s.trim();
        if t == "1" {
            return Ok(Self::unit());
        }
        if t.is_empty() {
            return Err(WordParseError(s.to_string()));
        }
        t.chars()
            .map(|c| match c {
                '+' => Ok(Sign::Plus),
                '-' => Ok(Sign::Minus),
                _ => Err(WordParseError(s.to_string())),
            })
            .collect()
    }
}
