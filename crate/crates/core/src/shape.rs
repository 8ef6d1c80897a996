//! Serial decomposition of a bordism into generators.
//!
//! Every bordism `M -> N` factors as
//!
//! ```text
//! id_M ⊗ cup^c  ;  labelled permutation  ;  cap^k ⊗ id_N
//! ```
//!
//! tensored with its circles, where every cup is the `(+,-)` coevaluation and
//! every cap the `(-,+)` evaluation. Quotation into terms and evaluation into a
//! backend both read the bordism through this shape.

use num_traits::Zero;

use crate::bordism::{ArcKind, Bordism, PairOrder, Side};
use crate::multiset::ScalarMultiset;
use crate::object::{BoundaryObject, Sign};
use crate::Label;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SerialShape {
    pub src: BoundaryObject,
    pub tgt: BoundaryObject,
    /// Number of `(+,-)` cups appended to the source.
    pub cups: usize,
    /// `src ⊗ (+,-)^cups`, the domain of the permutation block.
    pub middle: BoundaryObject,
    /// One label per letter of `middle`; each component's label sits on
    /// exactly one wire.
    pub wire_labels: Vec<Label>,
    /// Letter `i` of `middle` moves to position `permutation[i]` of
    /// `(-,+)^caps ⊗ tgt`.
    pub permutation: Vec<usize>,
    /// Number of `(-,+)` caps consuming the front of the permuted word.
    pub caps: usize,
    pub circles: ScalarMultiset,
}

impl SerialShape {
    pub fn of(b: &Bordism) -> Self {
        let src = b.src().clone();
        let tgt = b.tgt().clone();
        let m = src.len();
        let cap_arcs: Vec<_> = b.arcs().iter().filter(|a| a.kind() == ArcKind::Cap).collect();
        let cup_arcs: Vec<_> = b.arcs().iter().filter(|a| a.kind() == ArcKind::Cup).collect();
        let caps = cap_arcs.len();
        let cups = cup_arcs.len();

        let mut middle = src.clone();
        for _ in 0..cups {
            middle = middle.tensor(&PairOrder::PlusMinus.word());
        }
        let n = middle.len();
        let mut permutation = vec![usize::MAX; n];
        let mut wire_labels = vec![Label::zero(); n];
        let out = |target_index: usize| 2 * caps + target_index;

        for arc in b.arcs().iter().filter(|a| a.kind() == ArcKind::Through) {
            let (s, t) = arc.ends();
            permutation[s.index] = out(t.index);
            wire_labels[s.index] = arc.label().clone();
        }
        for (j, arc) in cap_arcs.iter().enumerate() {
            let (p, q) = arc.ends();
            let (minus, plus) = if b.sign_at(p) == Sign::Minus { (p, q) } else { (q, p) };
            permutation[minus.index] = 2 * j;
            permutation[plus.index] = 2 * j + 1;
            wire_labels[plus.index] = arc.label().clone();
        }
        for (c, arc) in cup_arcs.iter().enumerate() {
            let (p, q) = arc.ends();
            debug_assert!(p.side == Side::Target && q.side == Side::Target);
            let (plus, minus) = if b.sign_at(p) == Sign::Plus { (p, q) } else { (q, p) };
            let plus_wire = m + 2 * c;
            permutation[plus_wire] = out(plus.index);
            permutation[plus_wire + 1] = out(minus.index);
            wire_labels[plus_wire] = arc.label().clone();
        }
        debug_assert!(permutation.iter().all(|&p| p != usize::MAX));

        Self {
            src,
            tgt,
            cups,
            middle,
            wire_labels,
            permutation,
            caps,
            circles: b.circles().clone(),
        }
    }

    /// `(-,+)^caps ⊗ tgt`, the codomain of the permutation block.
    pub fn permuted(&self) -> BoundaryObject {
        let mut w = BoundaryObject::unit();
        for _ in 0..self.caps {
            w = w.tensor(&PairOrder::MinusPlus.word());
        }
        w.tensor(&self.tgt)
    }

    /// Adjacent transpositions sorting `permutation`: swapping positions
    /// `(i, i+1)` in order turns the middle word into the permuted word.
    pub fn adjacent_swaps(&self) -> Vec<usize> {
        let mut current = self.permutation.clone();
        let mut swaps = Vec::new();
        let n = current.len();
        for pass in 0..n {
            for i in 0..n.saturating_sub(1 + pass) {
                if current[i] > current[i + 1] {
                    current.swap(i, i + 1);
                    swaps.push(i);
                }
            }
        }
        swaps
    }

    /// Reassemble the bordism from the shape using bordism operations.
    pub fn reassemble(&self) -> Bordism {
        let mut cups = Bordism::identity(&self.src);
        for _ in 0..self.cups {
            cups = cups.tensor(&Bordism::cup(PairOrder::PlusMinus));
        }
        let block = Bordism::permutation(&self.middle, &self.permutation, self.wire_labels.clone())
            .expect("shape permutation is a bijection");
        let mut caps = Bordism::empty();
        for _ in 0..self.caps {
            caps = caps.tensor(&Bordism::cap(PairOrder::MinusPlus));
        }
        let caps = caps.tensor(&Bordism::identity(&self.tgt));
        cups.compose(&block)
            .and_then(|b| b.compose(&caps))
            .expect("shape stages are composable")
            .tensor(&Bordism::closed(self.circles.clone()))
    }
}
