//! Exact computations in the oriented 1-dimensional cobordism category with
//! integer labels.
//!
//! - [`object`] and [`bordism`]: boundary words, labelled bordisms, gluing,
//!   disjoint union, symmetry, duality data and closure.
//! - [`multiset`]: the scalars, finite multisets of integers.
//! - [`term`]: a small term language for the free symmetric monoidal
//!   category with duals on one positive point with an automorphism, with a
//!   parser, typechecker, denotation into bordisms and quotation back.
//! - [`smc`]: an abstract symmetric monoidal backend interface, an exact
//!   rational matrix backend, and evaluation of bordisms and terms.
//! - [`trace`]: generic traces, the theta family, classification of scalars
//!   and generation queries.
//! - [`random`] and [`check`]: seeded generators and the property suites
//!   driven by the command line tool.
//!
//! Composition is diagrammatic everywhere: `f.compose(&g)` means "`f`, then
//! `g`".

pub mod bordism;
pub mod check;
pub mod multiset;
pub mod object;
pub mod random;
pub mod shape;
pub mod smc;
pub mod term;
pub mod trace;
mod union_find;

/// Component labels are arbitrary-precision integers.
pub type Label = num_bigint::BigInt;

pub use bordism::{Arc, ArcKind, Bordism, BordismError, DualityData, PairOrder, Port, Side};
pub use multiset::ScalarMultiset;
pub use object::{BoundaryObject, Sign};
