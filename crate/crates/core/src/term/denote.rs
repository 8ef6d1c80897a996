use num_traits::Zero;

use crate::bordism::{Bordism, PairOrder};
use crate::object::{BoundaryObject, Sign};
use crate::shape::SerialShape;
use crate::Label;

use super::{ObjExpr, Term, TypeError};

/// The bordism a term denotes. Two terms are equal in the free symmetric
/// monoidal category with duals on `(+, a)` exactly when their denotations
/// are equal.
pub fn denote(t: &Term) -> Result<Bordism, TypeError> {
    match t {
        Term::Id(o) => Ok(Bordism::identity(&o.flatten())),
        Term::Swap(a, b) => Ok(Bordism::swap(&a.flatten(), &b.flatten())),
        Term::Ev => Ok(Bordism::cap(PairOrder::MinusPlus)),
        Term::Coev => Ok(Bordism::cup(PairOrder::PlusMinus)),
        Term::Alpha(k) => Ok(Bordism::alpha(k.clone())),
        Term::Seq(f, g) => {
            let (f, g) = (denote(f)?, denote(g)?);
            f.compose(&g).map_err(|_| TypeError {
                subterm: t.to_string(),
                left: f.tgt().clone(),
                right: g.src().clone(),
            })
        }
        Term::Par(f, g) => Ok(denote(f)?.tensor(&denote(g)?)),
    }
}

/// A term denoting `b`, in a fixed serial shape: cups, then labels on the
/// wires, then adjacent swaps, then caps, with circles tensored on as closed
/// loops.
pub fn quote(b: &Bordism) -> Term {
    let shape = SerialShape::of(b);
    let mut stages = Vec::new();

    if shape.cups > 0 {
        let cups = Term::par_all(std::iter::repeat(Term::Coev).take(shape.cups)).expect("nonempty");
        stages.push(prefix_identity(&shape.src, cups));
    }

    if shape.wire_labels.iter().any(|l| !l.is_zero()) {
        let wires = shape
            .middle
            .signs()
            .iter()
            .zip(&shape.wire_labels)
            .map(|(&s, k)| labelled_wire(s, k));
        stages.push(Term::par_all(wires).expect("labels imply wires"));
    }

    let mut word: Vec<Sign> = shape.middle.signs().to_vec();
    for i in shape.adjacent_swaps() {
        let prefix = BoundaryObject::new(word[..i].to_vec());
        let suffix = BoundaryObject::new(word[i + 2..].to_vec());
        let swap = Term::Swap(letter(word[i]), letter(word[i + 1]));
        stages.push(suffix_identity(prefix_identity(&prefix, swap), &suffix));
        word.swap(i, i + 1);
    }
    debug_assert_eq!(BoundaryObject::new(word), shape.permuted());

    if shape.caps > 0 {
        let caps = Term::par_all(std::iter::repeat(Term::Ev).take(shape.caps)).expect("nonempty");
        stages.push(suffix_identity(caps, &shape.tgt));
    }

    // With no stages the bordism is an identity; keep its strands unless the
    // word is empty and loops alone carry the whole bordism.
    let main = Term::seq_all(stages)
        .or_else(|| (!shape.src.is_empty() || shape.circles.is_empty()).then(|| Term::id_word(&shape.src)));
    let loops = shape.circles.iter().map(closed_loop);
    Term::par_all(main.into_iter().chain(loops)).expect("identity or loops")
}

fn letter(s: Sign) -> ObjExpr {
    match s {
        Sign::Plus => ObjExpr::Plus,
        Sign::Minus => ObjExpr::Minus,
    }
}

fn prefix_identity(prefix: &BoundaryObject, t: Term) -> Term {
    if prefix.is_empty() {
        t
    } else {
        Term::par(Term::id_word(prefix), t)
    }
}

fn suffix_identity(t: Term, suffix: &BoundaryObject) -> Term {
    if suffix.is_empty() {
        t
    } else {
        Term::par(t, Term::id_word(suffix))
    }
}

/// A single strand of the given orientation carrying `label` along its flow.
/// Negative strands are the generator strand bent through `coev` and `ev`.
pub(crate) fn labelled_wire(sign: Sign, label: &Label) -> Term {
    match sign {
        Sign::Plus if label.is_zero() => Term::Id(ObjExpr::Plus),
        Sign::Plus => Term::Alpha(label.clone()),
        Sign::Minus if label.is_zero() => Term::Id(ObjExpr::Minus),
        Sign::Minus => Term::seq_all([
            Term::par(Term::Id(ObjExpr::Minus), Term::Coev),
            Term::par(
                Term::par(Term::Id(ObjExpr::Minus), Term::Alpha(label.clone())),
                Term::Id(ObjExpr::Minus),
            ),
            Term::par(Term::Ev, Term::Id(ObjExpr::Minus)),
        ])
        .expect("nonempty"),
    }
}

/// `coev ; (a^k * id(-)) ; swap(+, -) ; ev`, the closure of `a^k`.
pub(crate) fn closed_loop(label: &Label) -> Term {
    let mut stages = vec![Term::Coev];
    if !label.is_zero() {
        stages.push(Term::par(Term::Alpha(label.clone()), Term::Id(ObjExpr::Minus)));
    }
    stages.push(Term::Swap(ObjExpr::Plus, ObjExpr::Minus));
    stages.push(Term::Ev);
    Term::seq_all(stages).expect("nonempty")
}
