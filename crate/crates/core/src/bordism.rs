//! Labelled 1-dimensional bordisms up to diffeomorphism.
//!
//! A bordism `M -> N` is an integer-labelled perfect matching on the boundary
//! ports of `M` (source side) and `N` (target side), together with a multiset
//! of labelled circles. Interval components are [`Arc`]s; closed components
//! are circles. Labels are stored along the orientation flow of each
//! component, so gluing adds labels with no sign correction.
//!
//! Composition is always written in diagrammatic order: `f.compose(&g)` is
//! "`f` then `g`", i.e. `g ∘ f` in conventional notation.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::Zero;
use serde::Serialize;
use thiserror::Error;

use crate::multiset::ScalarMultiset;
use crate::object::{BoundaryObject, Sign};
use crate::union_find::DisjointSet;
use crate::Label;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Side {
    Source,
    Target,
}

/// A boundary point of a bordism. Ports order source-before-target, then by
/// index, which is the order used for canonical forms.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Port {
    pub side: Side,
    pub index: usize,
}

impl Port {
    pub fn source(index: usize) -> Self {
        Self {
            side: Side::Source,
            index,
        }
    }

    pub fn target(index: usize) -> Self {
        Self {
            side: Side::Target,
            index,
        }
    }
}

impl fmt::Display for Port {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.side {
            Side::Source => write!(f, "s{}", self.index),
            Side::Target => write!(f, "t{}", self.index),
        }
    }
}

/// Kind of an interval component, determined by the sides of its ends.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ArcKind {
    /// Source to target.
    Through,
    /// Both ends on the source side (an evaluation strand).
    Cap,
    /// Both ends on the target side (a coevaluation strand).
    Cup,
}

/// An interval component. The endpoints are unordered; they are kept sorted
/// so that `ends().0 < ends().1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Arc {
    first: Port,
    second: Port,
    label: Label,
}

impl Arc {
    pub fn new(p: Port, q: Port, label: impl Into<Label>) -> Self {
        let (first, second) = if p <= q { (p, q) } else { (q, p) };
        Self {
            first,
            second,
            label: label.into(),
        }
    }

    pub fn ends(&self) -> (Port, Port) {
        (self.first, self.second)
    }

    pub fn label(&self) -> &Label {
        &self.label
    }

    pub fn kind(&self) -> ArcKind {
        match (self.first.side, self.second.side) {
            (Side::Source, Side::Target) => ArcKind::Through,
            (Side::Source, Side::Source) => ArcKind::Cap,
            _ => ArcKind::Cup,
        }
    }

    pub fn touches(&self, port: Port) -> bool {
        self.first == port || self.second == port
    }

    /// The end opposite to `port`; `port` must be one of the ends.
    pub fn other_end(&self, port: Port) -> Port {
        if self.first == port {
            self.second
        } else {
            self.first
        }
    }
}

impl fmt::Display for Arc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{})", self.first, self.second, self.label)
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum BordismError {
    #[error("boundary mismatch: target `{left}` does not match source `{right}`")]
    BoundaryMismatch {
        left: BoundaryObject,
        right: BoundaryObject,
    },
    #[error("not an endomorphism: source `{src}` differs from target `{tgt}`")]
    NotEndomorphism {
        src: BoundaryObject,
        tgt: BoundaryObject,
    },
    #[error("bordism `{0}` is not closed")]
    NotClosed(String),
    #[error("port {0} is out of range")]
    PortOutOfRange(Port),
    #[error("port {0} is used by more than one arc")]
    PortReused(Port),
    #[error("port {0} is not matched by any arc")]
    PortUnmatched(Port),
    #[error("arc {0} joins incompatible orientations")]
    SignMismatch(String),
    #[error("arc {0} joins a port to itself")]
    DegenerateArc(String),
    #[error("invalid permutation of length {0}")]
    InvalidPermutation(usize),
}

/// Order of the two points for a cap or a cup.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PairOrder {
    /// `(-, +)`
    MinusPlus,
    /// `(+, -)`
    PlusMinus,
}

impl PairOrder {
    pub fn word(self) -> BoundaryObject {
        match self {
            PairOrder::MinusPlus => BoundaryObject::new(vec![Sign::Minus, Sign::Plus]),
            PairOrder::PlusMinus => BoundaryObject::new(vec![Sign::Plus, Sign::Minus]),
        }
    }
}

/// A morphism of the labelled cobordism category, in canonical form.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Bordism {
    src: BoundaryObject,
    tgt: BoundaryObject,
    arcs: Vec<Arc>,
    circles: ScalarMultiset,
}

/// Dual object with evaluation `dual ⊗ obj -> 1` and coevaluation
/// `1 -> obj ⊗ dual`, both nested ("rainbow") and unlabelled.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DualityData {
    pub dual: BoundaryObject,
    pub ev: Bordism,
    pub coev: Bordism,
}

impl Bordism {
    /// Validate and canonicalize a bordism from its components.
    pub fn new(
        src: BoundaryObject,
        tgt: BoundaryObject,
        arcs: impl IntoIterator<Item = Arc>,
        circles: ScalarMultiset,
    ) -> Result<Self, BordismError> {
        let arcs: Vec<Arc> = arcs.into_iter().collect();
        let mut seen_src = vec![false; src.len()];
        let mut seen_tgt = vec![false; tgt.len()];
        for arc in &arcs {
            if arc.first == arc.second {
                return Err(BordismError::DegenerateArc(arc.to_string()));
            }
            for p in [arc.first, arc.second] {
                let seen = match p.side {
                    Side::Source => &mut seen_src,
                    Side::Target => &mut seen_tgt,
                };
                match seen.get_mut(p.index) {
                    None => return Err(BordismError::PortOutOfRange(p)),
                    Some(true) => return Err(BordismError::PortReused(p)),
                    Some(slot) => *slot = true,
                }
            }
            let sa = port_sign(&src, &tgt, arc.first);
            let sb = port_sign(&src, &tgt, arc.second);
            let compatible = match arc.kind() {
                ArcKind::Through => sa == sb,
                ArcKind::Cap | ArcKind::Cup => sa != sb,
            };
            if !compatible {
                return Err(BordismError::SignMismatch(arc.to_string()));
            }
        }
        if let Some(i) = seen_src.iter().position(|s| !s) {
            return Err(BordismError::PortUnmatched(Port::source(i)));
        }
        if let Some(i) = seen_tgt.iter().position(|s| !s) {
            return Err(BordismError::PortUnmatched(Port::target(i)));
        }
        Ok(Self::from_valid(src, tgt, arcs, circles))
    }

    fn from_valid(
        src: BoundaryObject,
        tgt: BoundaryObject,
        mut arcs: Vec<Arc>,
        circles: ScalarMultiset,
    ) -> Self {
        arcs.sort();
        Self {
            src,
            tgt,
            arcs,
            circles,
        }
    }

    pub fn src(&self) -> &BoundaryObject {
        &self.src
    }

    pub fn tgt(&self) -> &BoundaryObject {
        &self.tgt
    }

    /// Arcs in canonical order (by smaller endpoint).
    pub fn arcs(&self) -> &[Arc] {
        &self.arcs
    }

    pub fn circles(&self) -> &ScalarMultiset {
        &self.circles
    }

    /// No boundary at all: a scalar.
    pub fn is_closed(&self) -> bool {
        self.src.is_empty() && self.tgt.is_empty()
    }

    pub fn sign_at(&self, port: Port) -> Sign {
        port_sign(&self.src, &self.tgt, port)
    }

    /// The arc incident to `port`, if the port exists.
    pub fn arc_at(&self, port: Port) -> Option<&Arc> {
        self.arcs.iter().find(|a| a.touches(port))
    }

    pub fn identity(obj: &BoundaryObject) -> Self {
        let arcs = (0..obj.len())
            .map(|i| Arc::new(Port::source(i), Port::target(i), 0))
            .collect();
        Self::from_valid(obj.clone(), obj.clone(), arcs, ScalarMultiset::new())
    }

    /// The empty bordism `1 -> 1`, unit scalar.
    pub fn empty() -> Self {
        Self::identity(&BoundaryObject::unit())
    }

    /// The closed bordism with the given circles.
    pub fn closed(circles: ScalarMultiset) -> Self {
        Self::from_valid(
            BoundaryObject::unit(),
            BoundaryObject::unit(),
            Vec::new(),
            circles,
        )
    }

    pub fn circle(label: impl Into<Label>) -> Self {
        Self::closed(ScalarMultiset::singleton(label))
    }

    /// The generator strand on `+` carrying label `k`; `alpha(1)` is the
    /// generating automorphism and `alpha(k)` its `k`-th power.
    pub fn alpha(k: impl Into<Label>) -> Self {
        let plus = BoundaryObject::plus();
        Self::from_valid(
            plus.clone(),
            plus,
            vec![Arc::new(Port::source(0), Port::target(0), k)],
            ScalarMultiset::new(),
        )
    }

    /// The symmetry `a ⊗ b -> b ⊗ a`.
    pub fn swap(a: &BoundaryObject, b: &BoundaryObject) -> Self {
        let (la, lb) = (a.len(), b.len());
        let arcs = (0..la)
            .map(|i| Arc::new(Port::source(i), Port::target(lb + i), 0))
            .chain((0..lb).map(|j| Arc::new(Port::source(la + j), Port::target(j), 0)))
            .collect();
        Self::from_valid(a.tensor(b), b.tensor(a), arcs, ScalarMultiset::new())
    }

    /// A single unlabelled cap on the source side.
    pub fn cap(order: PairOrder) -> Self {
        Self::from_valid(
            order.word(),
            BoundaryObject::unit(),
            vec![Arc::new(Port::source(0), Port::source(1), 0)],
            ScalarMultiset::new(),
        )
    }

    /// A single unlabelled cup on the target side.
    pub fn cup(order: PairOrder) -> Self {
        Self::from_valid(
            BoundaryObject::unit(),
            order.word(),
            vec![Arc::new(Port::target(0), Port::target(1), 0)],
            ScalarMultiset::new(),
        )
    }

    /// The labelled permutation sending source port `i` to target port
    /// `perm[i]` with label `labels[i]`. The target word is determined by the
    /// source word and the permutation.
    pub fn permutation(
        src: &BoundaryObject,
        perm: &[usize],
        labels: Vec<Label>,
    ) -> Result<Self, BordismError> {
        let n = src.len();
        if perm.len() != n || labels.len() != n {
            return Err(BordismError::InvalidPermutation(n));
        }
        let mut tgt = vec![None; n];
        for (i, &p) in perm.iter().enumerate() {
            match tgt.get_mut(p) {
                Some(slot @ None) => *slot = Some(src[i]),
                _ => return Err(BordismError::InvalidPermutation(n)),
            }
        }
        let tgt: BoundaryObject = tgt.into_iter().map(|s| s.expect("bijective")).collect();
        let arcs = perm
            .iter()
            .zip(labels)
            .enumerate()
            .map(|(i, (&p, l))| Arc::new(Port::source(i), Port::target(p), l))
            .collect();
        Ok(Self::from_valid(src.clone(), tgt, arcs, ScalarMultiset::new()))
    }

    /// Glue `self: M -> N` to `next: N -> L` along `N`, port by port.
    ///
    /// Components that meet at glued ports are merged; the merged label is
    /// the sum of the arc labels. Components with no remaining boundary
    /// become circles.
    pub fn compose(&self, next: &Bordism) -> Result<Bordism, BordismError> {
        if self.tgt != next.src {
            return Err(BordismError::BoundaryMismatch {
                left: self.tgt.clone(),
                right: next.src.clone(),
            });
        }
        let nf = self.arcs.len();
        let glued = self.tgt.len();
        let mut f_at = vec![usize::MAX; glued];
        let mut g_at = vec![usize::MAX; glued];
        for (ai, arc) in self.arcs.iter().enumerate() {
            for p in [arc.first, arc.second] {
                if p.side == Side::Target {
                    f_at[p.index] = ai;
                }
            }
        }
        for (ai, arc) in next.arcs.iter().enumerate() {
            for p in [arc.first, arc.second] {
                if p.side == Side::Source {
                    g_at[p.index] = ai;
                }
            }
        }
        let mut ds = DisjointSet::new(nf + next.arcs.len());
        for i in 0..glued {
            ds.union(f_at[i], nf + g_at[i]);
        }

        // root -> (label sum, remaining boundary ports)
        let mut components: BTreeMap<usize, (Label, Vec<Port>)> = BTreeMap::new();
        let all = self
            .arcs
            .iter()
            .map(|a| (a, Side::Source))
            .chain(next.arcs.iter().map(|a| (a, Side::Target)));
        for (ai, (arc, kept_side)) in all.enumerate() {
            let entry = components
                .entry(ds.find(ai))
                .or_insert_with(|| (BigInt::zero(), Vec::new()));
            entry.0 += &arc.label;
            for p in [arc.first, arc.second] {
                if p.side == kept_side {
                    entry.1.push(p);
                }
            }
        }

        let mut arcs = Vec::new();
        let mut circles = self.circles.union(&next.circles);
        for (_, (label, ends)) in components {
            match ends.as_slice() {
                [] => circles.insert(label),
                [p, q] => arcs.push(Arc::new(*p, *q, label)),
                _ => unreachable!("a component of a glued 1-manifold has 0 or 2 ends"),
            }
        }
        Ok(Self::from_valid(
            self.src.clone(),
            next.tgt.clone(),
            arcs,
            circles,
        ))
    }

    /// Disjoint union; ports of `other` are shifted past those of `self`.
    pub fn tensor(&self, other: &Bordism) -> Bordism {
        let (ds, dt) = (self.src.len(), self.tgt.len());
        let shift = |p: Port| match p.side {
            Side::Source => Port::source(p.index + ds),
            Side::Target => Port::target(p.index + dt),
        };
        let arcs = self
            .arcs
            .iter()
            .cloned()
            .chain(
                other
                    .arcs
                    .iter()
                    .map(|a| Arc::new(shift(a.first), shift(a.second), a.label.clone())),
            )
            .collect();
        Self::from_valid(
            self.src.tensor(&other.src),
            self.tgt.tensor(&other.tgt),
            arcs,
            self.circles.union(&other.circles),
        )
    }

    /// Duality data for a word: port `i` of `obj` is matched with port
    /// `len - 1 - i` of its dual.
    pub fn duality_data(obj: &BoundaryObject) -> DualityData {
        let n = obj.len();
        let dual = obj.dual();
        // ev: dual ⊗ obj -> 1; dual occupies source 0..n, obj occupies n..2n.
        let ev_arcs = (0..n)
            .map(|i| Arc::new(Port::source(n + i), Port::source(n - 1 - i), 0))
            .collect();
        let ev = Self::from_valid(
            dual.tensor(obj),
            BoundaryObject::unit(),
            ev_arcs,
            ScalarMultiset::new(),
        );
        // coev: 1 -> obj ⊗ dual.
        let coev_arcs = (0..n)
            .map(|i| Arc::new(Port::target(i), Port::target(2 * n - 1 - i), 0))
            .collect();
        let coev = Self::from_valid(
            BoundaryObject::unit(),
            obj.tensor(&dual),
            coev_arcs,
            ScalarMultiset::new(),
        );
        DualityData { dual, ev, coev }
    }

    fn require_endomorphism(&self) -> Result<(), BordismError> {
        if self.src != self.tgt {
            return Err(BordismError::NotEndomorphism {
                src: self.src.clone(),
                tgt: self.tgt.clone(),
            });
        }
        Ok(())
    }

    /// Closure of an endomorphism through its duality data:
    /// `coev ; (f ⊗ id_dual) ; swap(obj, dual) ; ev`.
    pub fn trace_close(&self) -> Result<Bordism, BordismError> {
        self.require_endomorphism()?;
        let obj = &self.src;
        let DualityData { dual, ev, coev } = Self::duality_data(obj);
        let closed = coev
            .compose(&self.tensor(&Self::identity(&dual)))?
            .compose(&Self::swap(obj, &dual))?
            .compose(&ev)?;
        Ok(closed)
    }

    /// Closure of an endomorphism by gluing target port `i` directly to
    /// source port `i`.
    pub fn trace_close_direct(&self) -> Result<Bordism, BordismError> {
        self.require_endomorphism()?;
        let n = self.src.len();
        let mut at_src = vec![0; n];
        let mut at_tgt = vec![0; n];
        for (ai, arc) in self.arcs.iter().enumerate() {
            for p in [arc.first, arc.second] {
                match p.side {
                    Side::Source => at_src[p.index] = ai,
                    Side::Target => at_tgt[p.index] = ai,
                }
            }
        }
        let mut ds = DisjointSet::new(self.arcs.len());
        for i in 0..n {
            ds.union(at_src[i], at_tgt[i]);
        }
        let mut sums: BTreeMap<usize, Label> = BTreeMap::new();
        for (ai, arc) in self.arcs.iter().enumerate() {
            *sums.entry(ds.find(ai)).or_insert_with(BigInt::zero) += &arc.label;
        }
        let mut circles = self.circles.clone();
        for (_, label) in sums {
            circles.insert(label);
        }
        Ok(Self::closed(circles))
    }

    /// A sign-preserving labelled permutation with no circles.
    pub fn is_invertible(&self) -> bool {
        self.circles.is_empty() && self.arcs.iter().all(|a| a.kind() == ArcKind::Through)
    }

    /// The inverse of an invertible bordism: reversed permutation with
    /// negated labels.
    pub fn inverse(&self) -> Option<Bordism> {
        if !self.is_invertible() {
            return None;
        }
        let arcs = self
            .arcs
            .iter()
            .map(|a| {
                Arc::new(
                    Port::source(a.second.index),
                    Port::target(a.first.index),
                    -&a.label,
                )
            })
            .collect();
        Some(Self::from_valid(
            self.tgt.clone(),
            self.src.clone(),
            arcs,
            ScalarMultiset::new(),
        ))
    }

    /// Structured form mirroring the text serialization field for field.
    pub fn to_json(&self) -> serde_json::Value {
        #[derive(Serialize)]
        struct ArcJson {
            p: String,
            q: String,
            label: String,
        }
        #[derive(Serialize)]
        struct BordismJson {
            src: String,
            tgt: String,
            arcs: Vec<ArcJson>,
            circles: Vec<String>,
        }
        let v = BordismJson {
            src: self.src.to_string(),
            tgt: self.tgt.to_string(),
            arcs: self
                .arcs
                .iter()
                .map(|a| ArcJson {
                    p: a.first.to_string(),
                    q: a.second.to_string(),
                    label: a.label.to_string(),
                })
                .collect(),
            circles: self.circles.iter().map(|l| l.to_string()).collect(),
        };
        serde_json::to_value(v).expect("plain strings serialize")
    }
}

fn port_sign(src: &BoundaryObject, tgt: &BoundaryObject, port: Port) -> Sign {
    match port.side {
        Side::Source => src[port.index],
        Side::Target => tgt[port.index],
    }
}

/// Canonical serialization:
/// `src=<word>; tgt=<word>; arcs=[(p,q,l),...]; circles=[l1,l2,...]`.
impl fmt::Display for Bordism {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "src={}; tgt={}; arcs=[", self.src, self.tgt)?;
        for (i, a) in self.arcs.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{a}")?;
        }
        f.write_str("]; circles=[")?;
        self.circles.write_elements(f)?;
        f.write_str("]")
    }
}
