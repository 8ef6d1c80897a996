//! Traces, the theta family and the classification of scalars.
//!
//! For an automorphism `a` of a dualisable object `x`,
//! `Θ^{k₁,…,kₙ}(x, a)` is the product of the traces `Tr(a^{kᵢ})`. In the
//! cobordism category the trace of a labelled permutation closes every cycle
//! to a circle carrying the cycle's label sum, so scalars are exactly
//! multisets of integers.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

use crate::bordism::{Bordism, BordismError};
use crate::multiset::{MultisetParseError, ScalarMultiset};
use crate::object::BoundaryObject;
use crate::smc::{power_of, CobBackend, Duality, DualizablePair, SmcBackend};
use crate::Label;

/// `coev ; (f ⊗ id_y) ; swap(x, y) ; ev` for an endomorphism `f` of `x`.
pub fn trace_of<B: SmcBackend>(
    backend: &B,
    duality: &Duality<B>,
    f: &B::Morphism,
) -> Result<B::Morphism, B::Error> {
    let bent = backend.tensor(f, &backend.identity(&duality.dual));
    let closed = backend.compose(&duality.coev, &bent)?;
    let swapped = backend.compose(&closed, &backend.braiding(&duality.object, &duality.dual))?;
    backend.compose(&swapped, &duality.ev)
}

/// The trace of the automorphism of a pair.
pub fn generic_trace<B: SmcBackend>(
    backend: &B,
    pair: &DualizablePair<B>,
) -> Result<B::Morphism, B::Error> {
    trace_of(backend, &pair.duality, &pair.auto)
}

/// Exponents `k₁,…,kₙ` of a theta transformation. Order is irrelevant.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct ThetaSpec(pub ScalarMultiset);

impl ThetaSpec {
    pub fn new(exponents: impl IntoIterator<Item = impl Into<Label>>) -> Self {
        ThetaSpec(exponents.into_iter().map(Into::into).collect())
    }

    pub fn exponents(&self) -> &ScalarMultiset {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn has_negative(&self) -> bool {
        self.0.iter().any(Signed::is_negative)
    }
}

/// `theta[k1,k2,...]`, sorted ascending.
impl fmt::Display for ThetaSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("theta[")?;
        self.0.write_elements(f)?;
        f.write_str("]")
    }
}

/// Accepts `theta[k1,...]` or a bare `[k1,...]` / `k1,...`.
impl FromStr for ThetaSpec {
    type Err = MultisetParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let t = s.trim();
        let t = t.strip_prefix("theta").map_or(t, str::trim_start);
        let body = match t.strip_prefix('[') {
            Some(rest) => rest.strip_suffix(']').ok_or_else(|| MultisetParseError {
                input: s.to_string(),
                reason: "missing closing `]`".to_string(),
            })?,
            None => t,
        };
        ScalarMultiset::parse_elements(body, s).map(ThetaSpec)
    }
}

/// `Θ^{spec}` at a pair; the unit scalar for the empty spec.
pub fn theta<B: SmcBackend>(
    backend: &B,
    pair: &DualizablePair<B>,
    spec: &ThetaSpec,
) -> Result<B::Morphism, B::Error> {
    let mut result = backend.identity(&backend.unit());
    for k in spec.0.iter() {
        let t = trace_of(backend, &pair.duality, &pair.power(backend, k)?)?;
        result = backend.compose(&result, &t)?;
    }
    Ok(result)
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum TraceError {
    #[error(transparent)]
    Bordism(#[from] BordismError),
    #[error("negative exponent {exponent} requires an invertible bordism, but `{bordism}` is not")]
    NotInvertible { exponent: Label, bordism: String },
    #[error("`{0}` is not an invertible endomorphism")]
    NotAutomorphism(String),
}

/// The scalar a closed bordism represents.
pub fn classify_scalar(b: &Bordism) -> Result<ScalarMultiset, BordismError> {
    if !b.is_closed() {
        return Err(BordismError::NotClosed(b.to_string()));
    }
    Ok(b.circles().clone())
}

/// `Θ^{spec}` of an arbitrary endomorphism bordism in the cobordism
/// category. Negative exponents need the bordism to be invertible.
pub fn theta_of_endomorphism(b: &Bordism, spec: &ThetaSpec) -> Result<ScalarMultiset, TraceError> {
    if b.src() != b.tgt() {
        return Err(BordismError::NotEndomorphism {
            src: b.src().clone(),
            tgt: b.tgt().clone(),
        }
        .into());
    }
    let backend = CobBackend;
    let duality = backend.duality_for(b.src());
    let inverse = b.inverse();
    let mut out = ScalarMultiset::new();
    for k in spec.0.iter() {
        let base = if k.is_negative() {
            inverse.as_ref().ok_or_else(|| TraceError::NotInvertible {
                exponent: k.clone(),
                bordism: b.to_string(),
            })?
        } else {
            b
        };
        let power = power_of(&backend, b.src(), base, &k.abs())?;
        out.extend_from(&classify_scalar(&trace_of(&backend, &duality, &power)?)?);
    }
    Ok(out)
}

/// An invertible endomorphism of a boundary word in the cobordism category.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AutomorphismPoint {
    object: BoundaryObject,
    auto: Bordism,
}

impl AutomorphismPoint {
    pub fn new(auto: Bordism) -> Result<Self, TraceError> {
        if auto.src() != auto.tgt() || !auto.is_invertible() {
            return Err(TraceError::NotAutomorphism(auto.to_string()));
        }
        Ok(Self {
            object: auto.src().clone(),
            auto,
        })
    }

    /// `α^{k₁} ⊔ ⋯ ⊔ α^{kₙ}` on `n` positive points.
    pub fn from_labels<'a>(labels: impl IntoIterator<Item = &'a Label>) -> Self {
        let auto = labels
            .into_iter()
            .fold(Bordism::empty(), |acc, k| acc.tensor(&Bordism::alpha(k.clone())));
        Self::new(auto).expect("powers of alpha are invertible")
    }

    /// Disjoint cyclic permutations of positive points, one per
    /// `(length, label sum)`, with each cycle's label on its first arc.
    pub fn from_cycles(cycles: &[(usize, Label)]) -> Self {
        let n: usize = cycles.iter().map(|(m, _)| m).sum();
        let mut perm = Vec::with_capacity(n);
        let mut labels = Vec::with_capacity(n);
        let mut start = 0;
        for (m, l) in cycles {
            for j in 0..*m {
                perm.push(start + (j + 1) % m);
                labels.push(if j == 0 { l.clone() } else { Label::zero() });
            }
            start += m;
        }
        let auto = Bordism::permutation(&BoundaryObject::plus_power(n), &perm, labels)
            .expect("valid permutation");
        Self::new(auto).expect("permutations are invertible")
    }

    pub fn object(&self) -> &BoundaryObject {
        &self.object
    }

    pub fn auto(&self) -> &Bordism {
        &self.auto
    }

    pub fn pair(&self) -> DualizablePair<CobBackend> {
        DualizablePair {
            duality: CobBackend.duality_for(&self.object),
            auto: self.auto.clone(),
            auto_inv: self.auto.inverse().expect("checked invertible"),
        }
    }

    /// `u⁻¹ ; a ; u` for an invertible `u` out of the object.
    pub fn conjugate(&self, u: &Bordism) -> Result<Self, TraceError> {
        let inv = u
            .inverse()
            .ok_or_else(|| TraceError::NotAutomorphism(u.to_string()))?;
        Self::new(inv.compose(&self.auto)?.compose(u)?)
    }
}

impl fmt::Display for AutomorphismPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.auto)
    }
}

/// The scalar `Θ^{spec}(point)`, read as a multiset.
pub fn act_on_theta(point: &AutomorphismPoint, spec: &ThetaSpec) -> ScalarMultiset {
    let scalar = theta(&CobBackend, &point.pair(), spec).expect("well-typed by construction");
    classify_scalar(&scalar).expect("traces are closed")
}

/// Why no automorphism can realise a target.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Obstruction {
    /// The empty theta is the unit scalar.
    EmptySpec,
    /// Every cycle closes to at least one circle per exponent.
    ComponentCount { exponents: usize, circles: usize },
    /// `a^k` closes a cycle of length `m` with label sum `L` into
    /// `g = gcd(m, k)` circles each labelled `(k/g)·L`.
    Divisibility { exponent: Label, label: Label },
}

impl Obstruction {
    pub fn name(&self) -> &'static str {
        match self {
            Obstruction::EmptySpec => "empty-spec",
            Obstruction::ComponentCount { .. } => "component-count",
            Obstruction::Divisibility { .. } => "divisibility",
        }
    }
}

impl fmt::Display for Obstruction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Obstruction::EmptySpec => f.write_str("empty-spec: the empty theta only produces {}"),
            Obstruction::ComponentCount { exponents, circles } => write!(
                f,
                "component-count: every nonempty point yields at least {exponents} circles, target has {circles}"
            ),
            Obstruction::Divisibility { exponent, label } => write!(
                f,
                "divisibility: no power a^{exponent} closes to a circle labelled {label} \
                 (needs (k/g) | label with g | k and at least g copies)"
            ),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Generation {
    Witness(AutomorphismPoint),
    Obstructed(Obstruction),
    /// No obstruction applies, but nothing within the bound hits the target.
    NotFound { bound: usize },
}

impl Generation {
    pub fn witness(&self) -> Option<&AutomorphismPoint> {
        match self {
            Generation::Witness(p) => Some(p),
            _ => None,
        }
    }
}

/// Find a point `(M, a)` with `Θ^{spec}(M, a) = target`.
///
/// `Θ^{1}` and `Θ^{-1}` get the explicit witness `⊔ α^{±kᵢ}`. Otherwise the
/// component-count and divisibility obstructions are tried, then conjugacy
/// classes of labelled permutations on at most `bound` positive points with
/// arc labels in `[-bound, bound]` are searched in a fixed order.
pub fn find_generating_witness(spec: &ThetaSpec, target: &ScalarMultiset, bound: usize) -> Generation {
    if target.is_empty() {
        return Generation::Witness(AutomorphismPoint::from_labels([]));
    }
    if spec.is_empty() {
        return Generation::Obstructed(Obstruction::EmptySpec);
    }
    if spec.len() == 1 {
        let k = spec.0.iter().next().expect("one exponent");
        if k.abs().is_one() {
            let labels: Vec<Label> = target.iter().map(|t| t * k).collect();
            return Generation::Witness(AutomorphismPoint::from_labels(&labels));
        }
    }
    if target.len() < spec.len() {
        return Generation::Obstructed(Obstruction::ComponentCount {
            exponents: spec.len(),
            circles: target.len(),
        });
    }
    if spec.len() == 1 {
        let k = spec.0.iter().next().expect("one exponent");
        if let Some(label) = divisibility_violation(k, target) {
            return Generation::Obstructed(Obstruction::Divisibility {
                exponent: k.clone(),
                label,
            });
        }
    }
    let mut search = Search {
        spec,
        target,
        bound,
        exponents: spec.0.iter().cloned().collect(),
        cycles: Vec::new(),
    };
    match search.run() {
        Some(point) => Generation::Witness(point),
        None => Generation::NotFound { bound },
    }
}

/// A target label that no cycle of `a^k` can produce.
fn divisibility_violation(k: &Label, target: &ScalarMultiset) -> Option<Label> {
    if k.is_zero() {
        return target.counts().find(|(t, _)| !t.is_zero()).map(|(t, _)| t.clone());
    }
    let kabs = k.abs();
    for (t, mult) in target.counts() {
        let ok = (1..=mult).any(|g| {
            let g = BigInt::from(g);
            kabs.is_multiple_of(&g) && t.is_multiple_of(&(k / &g))
        });
        if !ok {
            return Some(t.clone());
        }
    }
    None
}

struct Search<'a> {
    spec: &'a ThetaSpec,
    target: &'a ScalarMultiset,
    bound: usize,
    exponents: Vec<Label>,
    cycles: Vec<(usize, Label)>,
}

impl Search<'_> {
    fn run(&mut self) -> Option<AutomorphismPoint> {
        (1..=self.bound).find_map(|n| self.extend(n, 0))
    }

    /// Circles contributed by one cycle of length `m`.
    fn circles_of(&self, m: usize) -> usize {
        self.exponents
            .iter()
            .map(|k| {
                let k = k.abs();
                if k.is_zero() {
                    m
                } else {
                    let g = k.gcd(&BigInt::from(m));
                    usize::try_from(g).expect("bounded by m")
                }
            })
            .sum()
    }

    /// Cycles are chosen with non-increasing length, and non-decreasing
    /// label sum within a length, so each conjugacy class is visited once.
    fn extend(&mut self, remaining: usize, circles: usize) -> Option<AutomorphismPoint> {
        if remaining == 0 {
            if circles != self.target.len() {
                return None;
            }
            let point = AutomorphismPoint::from_cycles(&self.cycles);
            return (act_on_theta(&point, self.spec) == *self.target).then_some(point);
        }
        let b = self.bound as i64;
        let max_len = self.cycles.last().map_or(remaining, |(m, _)| (*m).min(remaining));
        for m in (1..=max_len).rev() {
            let c = circles + self.circles_of(m);
            if c > self.target.len() {
                continue;
            }
            let span = m as i64 * b;
            let lo = match self.cycles.last() {
                Some((lm, ll)) if *lm == m => ll.clone(),
                _ => Label::from(-span),
            };
            let mut l = lo;
            while l <= Label::from(span) {
                self.cycles.push((m, l.clone()));
                let found = self.extend(remaining - m, c);
                self.cycles.pop();
                if found.is_some() {
                    return found;
                }
                l += 1;
            }
        }
        None
    }
}
