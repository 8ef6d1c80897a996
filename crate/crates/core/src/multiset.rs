//! Finite multisets of integers, the free commutative monoid on ℤ.
//!
//! Closed labelled 1-manifolds are disjoint unions of labelled circles, so a
//! scalar of the cobordism category is exactly one of these multisets.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::Add;
use std::str::FromStr;

use num_bigint::BigInt;
use thiserror::Error;

use crate::Label;

/// A finite multiset of integer labels, stored as label → multiplicity.
///
/// Multiplicities are always positive; a label with multiplicity zero is
/// simply absent, which keeps equality structural.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ScalarMultiset {
    counts: BTreeMap<Label, usize>,
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
#[error("invalid multiset literal `{input}`: {reason}")]
pub struct MultisetParseError {
    pub input: String,
    pub reason: String,
}

impl ScalarMultiset {
    /// The empty multiset, unit of the monoid.
    pub fn new() -> Self {
        Self::default()
    }

    pub fn singleton(label: impl Into<Label>) -> Self {
        let mut m = Self::new();
        m.insert(label.into());
        m
    }

    pub fn insert(&mut self, label: Label) {
        *self.counts.entry(label).or_insert(0) += 1;
    }

    pub fn insert_n(&mut self, label: Label, times: usize) {
        if times > 0 {
            *self.counts.entry(label).or_insert(0) += times;
        }
    }

    /// Total number of elements, counted with multiplicity.
    pub fn len(&self) -> usize {
        self.counts.values().sum()
    }

    pub fn is_empty(&self) -> bool {
        self.counts.is_empty()
    }

    pub fn multiplicity(&self, label: &Label) -> usize {
        self.counts.get(label).copied().unwrap_or(0)
    }

    /// Distinct labels with their multiplicities, ascending.
    pub fn counts(&self) -> impl Iterator<Item = (&Label, usize)> {
        self.counts.iter().map(|(l, &c)| (l, c))
    }

    /// All elements ascending, repeated according to multiplicity.
    pub fn iter(&self) -> impl Iterator<Item = &Label> {
        self.counts
            .iter()
            .flat_map(|(l, &c)| std::iter::repeat(l).take(c))
    }

    /// Multiset union (the monoid operation).
    pub fn union(&self, other: &Self) -> Self {
        let mut out = self.clone();
        out.extend_from(other);
        out
    }

    pub fn extend_from(&mut self, other: &Self) {
        for (l, &c) in &other.counts {
            self.insert_n(l.clone(), c);
        }
    }

    /// Apply `f` to every element, keeping multiplicities.
    pub fn map(&self, mut f: impl FnMut(&Label) -> Label) -> Self {
        let mut out = Self::new();
        for (l, &c) in &self.counts {
            out.insert_n(f(l), c);
        }
        out
    }

    /// Comma-separated elements without brackets, as used inside the
    /// bordism and theta serializations.
    pub(crate) fn write_elements(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, l) in self.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{l}")?;
        }
        Ok(())
    }

    /// Parse a comma-separated list of integers (possibly empty).
    pub(crate) fn parse_elements(body: &str, input: &str) -> Result<Self, MultisetParseError> {
        let mut out = Self::new();
        let body = body.trim();
        if body.is_empty() {
            return Ok(out);
        }
        for part in body.split(',') {
            let part = part.trim();
            let label = BigInt::from_str(part).map_err(|_| MultisetParseError {
                input: input.to_string(),
                reason: format!("`{part}` is not an integer"),
            })?;
            out.insert(label);
        }
        Ok(out)
    }
}

impl<L: Into<Label>> FromIterator<L> for ScalarMultiset {
    fn from_iter<I: IntoIterator<Item = L>>(iter: I) -> Self {
        let mut m = Self::new();
        for l in iter {
            m.insert(l.into());
        }
        m
    }
}

impl Add for ScalarMultiset {
    type Output = ScalarMultiset;

    fn add(mut self, rhs: Self) -> Self {
        self.extend_from(&rhs);
        self
    }
}

impl<'a> Add<&'a ScalarMultiset> for &'a ScalarMultiset {
    type Output = ScalarMultiset;

    fn add(self, rhs: &'a ScalarMultiset) -> ScalarMultiset {
        self.union(rhs)
    }
}

/// `{k1,k2,...}`, ascending with repetition.
impl fmt::Display for ScalarMultiset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        self.write_elements(f)?;
        f.write_str("}")
    }
}

impl FromStr for ScalarMultiset {
    type Err = MultisetParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let t = s.trim();
        let body = t
            .strip_prefix('{')
            .and_then(|r| r.strip_suffix('}'))
            .ok_or_else(|| MultisetParseError {
                input: s.to_string(),
                reason: "expected `{k1,k2,...}`".to_string(),
            })?;
        Self::parse_elements(body, s)
    }
}
