//! Symmetric monoidal backends and evaluation of bordisms into them.
//!
//! A symmetric monoidal functor out of the labelled cobordism category is
//! determined by a dualisable object with an automorphism
//! ([`DualizablePair`]). [`evaluate`] builds that functor on a bordism by
//! reading it through its [`SerialShape`]; [`evaluate_term`] interprets a
//! term directly by structural recursion. The two must agree.

mod cob;
mod matrix;

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};
use thiserror::Error;

use crate::bordism::Bordism;
use crate::object::{BoundaryObject, Sign};
use crate::shape::SerialShape;
use crate::term::{ObjExpr, Term, TypeError};
use crate::trace::trace_of;

pub use cob::CobBackend;
pub use matrix::{
    dualizable_from_matrix, parse_matrix_file, parse_rational, Matrix, MatrixBackend, MatrixError,
    MatrixFileError,
};

/// A strict symmetric monoidal category, accessed through explicit
/// operations. Composition is diagrammatic: `compose(f, g)` is "`f` then
/// `g`".
pub trait SmcBackend {
    type Object: Clone + PartialEq + fmt::Debug;
    type Morphism: Clone + PartialEq + fmt::Debug;
    type Error: std::error::Error;

    fn unit(&self) -> Self::Object;
    fn tensor_objects(&self, a: &Self::Object, b: &Self::Object) -> Self::Object;
    fn domain(&self, f: &Self::Morphism) -> Self::Object;
    fn codomain(&self, f: &Self::Morphism) -> Self::Object;
    fn identity(&self, obj: &Self::Object) -> Self::Morphism;
    fn compose(&self, f: &Self::Morphism, g: &Self::Morphism)
        -> Result<Self::Morphism, Self::Error>;
    fn tensor(&self, f: &Self::Morphism, g: &Self::Morphism) -> Self::Morphism;
    fn braiding(&self, a: &Self::Object, b: &Self::Object) -> Self::Morphism;

    /// The symmetry moving factor `i` of `objects` to position `perm[i]`.
    /// The default builds it from adjacent braidings.
    fn permute(
        &self,
        objects: &[Self::Object],
        perm: &[usize],
    ) -> Result<Self::Morphism, Self::Error> {
        let mut current: Vec<(usize, Self::Object)> =
            perm.iter().copied().zip(objects.iter().cloned()).collect();
        let mut result = self.identity(&self.tensor_all(objects));
        let n = current.len();
        for pass in 0..n {
            for i in 0..n.saturating_sub(1 + pass) {
                if current[i].0 > current[i + 1].0 {
                    let prefix: Vec<_> = current[..i].iter().map(|(_, o)| o.clone()).collect();
                    let suffix: Vec<_> = current[i + 2..].iter().map(|(_, o)| o.clone()).collect();
                    let step = self.tensor(
                        &self.tensor(
                            &self.identity(&self.tensor_all(&prefix)),
                            &self.braiding(&current[i].1, &current[i + 1].1),
                        ),
                        &self.identity(&self.tensor_all(&suffix)),
                    );
                    result = self.compose(&result, &step)?;
                    current.swap(i, i + 1);
                }
            }
        }
        Ok(result)
    }

    fn tensor_all(&self, objects: &[Self::Object]) -> Self::Object {
        objects
            .iter()
            .fold(self.unit(), |acc, o| self.tensor_objects(&acc, o))
    }

    /// Tensor product of morphisms; the identity of the unit when empty.
    fn tensor_morphisms(&self, morphisms: &[Self::Morphism]) -> Self::Morphism {
        morphisms
            .iter()
            .fold(self.identity(&self.unit()), |acc, m| self.tensor(&acc, m))
    }
}

/// An object with a chosen dual, evaluation `dual ⊗ object -> 1` and
/// coevaluation `1 -> object ⊗ dual`.
#[derive(Clone, Debug, PartialEq)]
pub struct Duality<B: SmcBackend> {
    pub object: B::Object,
    pub dual: B::Object,
    pub ev: B::Morphism,
    pub coev: B::Morphism,
}

impl<B: SmcBackend> Duality<B> {
    /// Both zig-zag identities, compared by backend equality.
    pub fn check_zigzags(&self, backend: &B) -> Result<bool, B::Error> {
        let idx = backend.identity(&self.object);
        let idy = backend.identity(&self.dual);
        let left = backend.compose(
            &backend.tensor(&self.coev, &idx),
            &backend.tensor(&idx, &self.ev),
        )?;
        let right = backend.compose(
            &backend.tensor(&idy, &self.coev),
            &backend.tensor(&self.ev, &idy),
        )?;
        Ok(left == idx && right == idy)
    }

    /// The mate `dual -> dual` of an endomorphism `f` of the object:
    /// `(id ⊗ coev) ; (id ⊗ f ⊗ id) ; (ev ⊗ id)`.
    pub fn mate(&self, backend: &B, f: &B::Morphism) -> Result<B::Morphism, B::Error> {
        let idy = backend.identity(&self.dual);
        let bent = backend.compose(
            &backend.tensor(&idy, &self.coev),
            &backend.tensor(&backend.tensor(&idy, f), &idy),
        )?;
        backend.compose(&bent, &backend.tensor(&self.ev, &idy))
    }
}

/// A dualisable object with an automorphism and its inverse: the data
/// classifying a symmetric monoidal functor out of the cobordism category.
#[derive(Clone, Debug, PartialEq)]
pub struct DualizablePair<B: SmcBackend> {
    pub duality: Duality<B>,
    pub auto: B::Morphism,
    pub auto_inv: B::Morphism,
}

impl<B: SmcBackend> DualizablePair<B> {
    pub fn object(&self) -> &B::Object {
        &self.duality.object
    }

    pub fn dual(&self) -> &B::Object {
        &self.duality.dual
    }

    /// `auto ; auto_inv` and `auto_inv ; auto` are both identities.
    pub fn check_inverse(&self, backend: &B) -> Result<bool, B::Error> {
        let id = backend.identity(self.object());
        Ok(backend.compose(&self.auto, &self.auto_inv)? == id
            && backend.compose(&self.auto_inv, &self.auto)? == id)
    }

    /// `auto^k`, using the stored inverse for negative `k`.
    pub fn power(&self, backend: &B, k: &BigInt) -> Result<B::Morphism, B::Error> {
        let base = if k.is_negative() { &self.auto_inv } else { &self.auto };
        power_of(backend, self.object(), base, &k.abs())
    }

    /// The image of a `-` strand carrying label `k`.
    pub fn dual_power(&self, backend: &B, k: &BigInt) -> Result<B::Morphism, B::Error> {
        if k.is_zero() {
            return Ok(backend.identity(self.dual()));
        }
        self.duality.mate(backend, &self.power(backend, k)?)
    }

    fn letter(&self, s: Sign) -> B::Object {
        match s {
            Sign::Plus => self.object().clone(),
            Sign::Minus => self.dual().clone(),
        }
    }

    /// Image of a boundary word.
    pub fn word_object(&self, backend: &B, word: &BoundaryObject) -> B::Object {
        let letters: Vec<_> = word.signs().iter().map(|&s| self.letter(s)).collect();
        backend.tensor_all(&letters)
    }

    fn expr_object(&self, backend: &B, o: &ObjExpr) -> B::Object {
        self.word_object(backend, &o.flatten())
    }
}

/// `f^n` for `n >= 0` by repeated squaring; `f^0` is the identity of `obj`.
pub fn power_of<B: SmcBackend>(
    backend: &B,
    obj: &B::Object,
    f: &B::Morphism,
    n: &BigInt,
) -> Result<B::Morphism, B::Error> {
    let mut result = backend.identity(obj);
    let mut base = f.clone();
    let mut n = n.clone();
    let two = BigInt::from(2);
    while n.is_positive() {
        if n.is_odd() {
            result = backend.compose(&result, &base)?;
        }
        n /= &two;
        if n.is_positive() {
            base = backend.compose(&base, &base)?;
        }
    }
    Ok(result)
}

#[derive(Debug, Error)]
pub enum EvalError<E: std::error::Error> {
    #[error(transparent)]
    Type(#[from] TypeError),
    #[error(transparent)]
    Backend(E),
}

/// The classified functor applied to a bordism.
///
/// Cups become `coev`, caps become `ev`, labelled wires become powers of the
/// automorphism (or their mates on `-` wires), the wiring becomes a
/// permutation of the backend, and each circle labelled `k` becomes the
/// trace of `auto^k`.
pub fn evaluate<B: SmcBackend>(
    b: &Bordism,
    pair: &DualizablePair<B>,
    backend: &B,
) -> Result<B::Morphism, B::Error> {
    let shape = SerialShape::of(b);
    let src = pair.word_object(backend, &shape.src);
    let tgt = pair.word_object(backend, &shape.tgt);

    let cups = vec![pair.duality.coev.clone(); shape.cups];
    let stage_cups = backend.tensor(&backend.identity(&src), &backend.tensor_morphisms(&cups));

    let wires = shape
        .middle
        .signs()
        .iter()
        .zip(&shape.wire_labels)
        .map(|(&s, k)| match s {
            Sign::Plus => pair.power(backend, k),
            Sign::Minus => pair.dual_power(backend, k),
        })
        .collect::<Result<Vec<_>, _>>()?;
    let stage_wires = backend.tensor_morphisms(&wires);

    let letters: Vec<_> = shape.middle.signs().iter().map(|&s| pair.letter(s)).collect();
    let stage_perm = backend.permute(&letters, &shape.permutation)?;

    let caps = vec![pair.duality.ev.clone(); shape.caps];
    let stage_caps = backend.tensor(&backend.tensor_morphisms(&caps), &backend.identity(&tgt));

    let mut result = backend.compose(&stage_cups, &stage_wires)?;
    result = backend.compose(&result, &stage_perm)?;
    result = backend.compose(&result, &stage_caps)?;
    for k in shape.circles.iter() {
        let scalar = trace_of(backend, &pair.duality, &pair.power(backend, k)?)?;
        result = backend.tensor(&result, &scalar);
    }
    Ok(result)
}

/// Interpret a term by structural recursion. Agrees with
/// `evaluate(denote(t))`.
pub fn evaluate_term<B: SmcBackend>(
    t: &Term,
    pair: &DualizablePair<B>,
    backend: &B,
) -> Result<B::Morphism, EvalError<B::Error>> {
    t.typecheck()?;
    eval_rec(t, pair, backend).map_err(EvalError::Backend)
}

fn eval_rec<B: SmcBackend>(
    t: &Term,
    pair: &DualizablePair<B>,
    backend: &B,
) -> Result<B::Morphism, B::Error> {
    Ok(match t {
        Term::Id(o) => backend.identity(&pair.expr_object(backend, o)),
        Term::Swap(a, b) => {
            backend.braiding(&pair.expr_object(backend, a), &pair.expr_object(backend, b))
        }
        Term::Ev => pair.duality.ev.clone(),
        Term::Coev => pair.duality.coev.clone(),
        Term::Alpha(k) => pair.power(backend, k)?,
        Term::Seq(f, g) => backend.compose(&eval_rec(f, pair, backend)?, &eval_rec(g, pair, backend)?)?,
        Term::Par(f, g) => backend.tensor(&eval_rec(f, pair, backend)?, &eval_rec(g, pair, backend)?),
    })
}
