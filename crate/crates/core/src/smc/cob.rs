//! The cobordism category itself as a backend.

use crate::bordism::{Bordism, BordismError, PairOrder};
use crate::object::BoundaryObject;

use super::{Duality, DualizablePair, SmcBackend};

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct CobBackend;

impl CobBackend {
    /// `(+, α)` with the single cap and cup: the universal pair. Evaluating
    /// at it is the identity functor.
    pub fn generator_pair(&self) -> DualizablePair<CobBackend> {
        DualizablePair {
            duality: Duality {
                object: BoundaryObject::plus(),
                dual: BoundaryObject::minus(),
                ev: Bordism::cap(PairOrder::MinusPlus),
                coev: Bordism::cup(PairOrder::PlusMinus),
            },
            auto: Bordism::alpha(1),
            auto_inv: Bordism::alpha(-1),
        }
    }

    /// Nested duality data for an arbitrary word.
    pub fn duality_for(&self, obj: &BoundaryObject) -> Duality<CobBackend> {
        let d = Bordism::duality_data(obj);
        Duality {
            object: obj.clone(),
            dual: d.dual,
            ev: d.ev,
            coev: d.coev,
        }
    }
}

impl SmcBackend for CobBackend {
    type Object = BoundaryObject;
    type Morphism = Bordism;
    type Error = BordismError;

    fn unit(&self) -> BoundaryObject {
        BoundaryObject::unit()
    }

    fn tensor_objects(&self, a: &BoundaryObject, b: &BoundaryObject) -> BoundaryObject {
        a.tensor(b)
    }

    fn domain(&self, f: &Bordism) -> BoundaryObject {
        f.src().clone()
    }

    fn codomain(&self, f: &Bordism) -> BoundaryObject {
        f.tgt().clone()
    }

    fn identity(&self, obj: &BoundaryObject) -> Bordism {
        Bordism::identity(obj)
    }

    fn compose(&self, f: &Bordism, g: &Bordism) -> Result<Bordism, BordismError> {
        f.compose(g)
    }

    fn tensor(&self, f: &Bordism, g: &Bordism) -> Bordism {
        f.tensor(g)
    }

    fn braiding(&self, a: &BoundaryObject, b: &BoundaryObject) -> Bordism {
        Bordism::swap(a, b)
    }
}
