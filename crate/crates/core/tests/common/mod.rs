//! Independent oracles shared by the integration tests.
//!
//! None of these go through the library's gluing, duality or evaluation
//! code; they recompute the same answers from first principles.

#![allow(dead_code)]

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use cobord::smc::Matrix;
use cobord::{Arc, Bordism, Port, ScalarMultiset, Side, Sign};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
enum Piece {
    F,
    G,
}

/// Glue `f` then `g` by walking the port graph: every walk starts at an
/// outer port, alternates between an arc and a glued junction, and stops at
/// the next outer port. Whatever arcs are left over lie on closed loops.
pub fn compose_by_walking(f: &Bordism, g: &Bordism) -> Option<Bordism> {
    if f.tgt() != g.src() {
        return None;
    }
    let lookup = |piece: Piece, port: Port| -> (Port, BigInt) {
        let b = if piece == Piece::F { f } else { g };
        let arc = b
            .arcs()
            .iter()
            .find(|a| a.touches(port))
            .expect("perfect matching");
        (arc.other_end(port), arc.label().clone())
    };
    // Outer ports: f's source and g's target.
    let is_outer = |piece: Piece, port: Port| match (piece, port.side) {
        (Piece::F, Side::Source) | (Piece::G, Side::Target) => true,
        _ => false,
    };
    let across = |piece: Piece, port: Port| match piece {
        Piece::F => (Piece::G, Port::source(port.index)),
        Piece::G => (Piece::F, Port::target(port.index)),
    };
    let outer_name = |piece: Piece, port: Port| match piece {
        Piece::F => Port::source(port.index),
        Piece::G => Port::target(port.index),
    };

    let mut used: BTreeMap<(Piece, Port), bool> = BTreeMap::new();
    let mut arcs = Vec::new();
    let outer: Vec<(Piece, Port)> = (0..f.src().len())
        .map(|i| (Piece::F, Port::source(i)))
        .chain((0..g.tgt().len()).map(|j| (Piece::G, Port::target(j))))
        .collect();
    for &(piece0, port0) in &outer {
        if used.contains_key(&(piece0, port0)) {
            continue;
        }
        let (mut piece, mut port) = (piece0, port0);
        let mut total = BigInt::zero();
        loop {
            used.insert((piece, port), true);
            let (end, label) = lookup(piece, port);
            used.insert((piece, end), true);
            total += label;
            if is_outer(piece, end) {
                arcs.push(Arc::new(outer_name(piece0, port0), outer_name(piece, end), total));
                break;
            }
            let (p2, q2) = across(piece, end);
            piece = p2;
            port = q2;
        }
    }

    let mut circles = f.circles().union(g.circles());
    // Remaining arcs sit on loops through the glued boundary only.
    for i in 0..f.tgt().len() {
        let start = (Piece::F, Port::target(i));
        if used.contains_key(&start) {
            continue;
        }
        let (mut piece, mut port) = start;
        let mut total = BigInt::zero();
        loop {
            used.insert((piece, port), true);
            let (end, label) = lookup(piece, port);
            used.insert((piece, end), true);
            total += label;
            let (p2, q2) = across(piece, end);
            if (p2, q2) == start {
                break;
            }
            piece = p2;
            port = q2;
        }
        circles.insert(total);
    }
    Some(Bordism::new(f.src().clone(), g.tgt().clone(), arcs, circles).expect("walk yields a matching"))
}

/// Cycles of a labelled permutation (source `i` to target `perm[i]`), each
/// with its label sum.
pub fn permutation_cycle_sums(perm: &[usize], labels: &[BigInt]) -> ScalarMultiset {
    let mut seen = vec![false; perm.len()];
    let mut out = ScalarMultiset::new();
    for s in 0..perm.len() {
        if seen[s] {
            continue;
        }
        let mut i = s;
        let mut sum = BigInt::zero();
        while !seen[i] {
            seen[i] = true;
            sum += &labels[i];
            i = perm[i];
        }
        out.insert(sum);
    }
    out
}

pub fn matrix_power(a: &Matrix, k: &BigInt) -> Matrix {
    let n: i64 = k.try_into().expect("small exponent");
    let base = if n < 0 { a.inverse().expect("invertible") } else { a.clone() };
    let mut out = Matrix::identity(a.rows());
    for _ in 0..n.unsigned_abs() {
        out = out.mul(&base).unwrap();
    }
    out
}

/// The matrix of `b` under the functor sending `+` to `ℚ^d` with
/// automorphism `a`, computed entry by entry as a product over
/// components (a state sum), in the standard basis with left-major
/// multi-indices.
pub fn state_sum(b: &Bordism, a: &Matrix) -> Matrix {
    let d = a.rows();
    let (m, n) = (b.src().len(), b.tgt().len());
    let mut powers: BTreeMap<BigInt, Matrix> = BTreeMap::new();
    for arc in b.arcs() {
        powers
            .entry(arc.label().clone())
            .or_insert_with(|| matrix_power(a, arc.label()));
    }
    let mut scalar = BigRational::one();
    for k in b.circles().iter() {
        scalar *= matrix_power(a, k).trace().unwrap();
    }
    let digits = |mut idx: usize, len: usize| {
        let mut v = vec![0; len];
        for i in (0..len).rev() {
            v[i] = idx % d;
            idx /= d;
        }
        v
    };
    let rows = d.pow(n as u32);
    let cols = d.pow(m as u32);
    Matrix::from_fn(rows, cols, |r, c| {
        let y = digits(r, n);
        let x = digits(c, m);
        let index = |p: Port| match p.side {
            Side::Source => x[p.index],
            Side::Target => y[p.index],
        };
        let mut entry = scalar.clone();
        for arc in b.arcs() {
            let (p, q) = arc.ends();
            let ak = &powers[arc.label()];
            let v = match (p.side, q.side) {
                (Side::Source, Side::Target) => match b.sign_at(p) {
                    // `a^k` maps the source basis vector to the target.
                    Sign::Plus => ak.get(index(q), index(p)).clone(),
                    // The mate of `a^k` is its transpose.
                    Sign::Minus => ak.get(index(p), index(q)).clone(),
                },
                // Cap: pairing `e^i ⊗ a^k e_j ↦ (a^k)_{ij}`.
                (Side::Source, Side::Source) => {
                    let (minus, plus) = if b.sign_at(p) == Sign::Minus { (p, q) } else { (q, p) };
                    ak.get(index(minus), index(plus)).clone()
                }
                // Cup: `Σ a^k e_i ⊗ e^i`.
                (Side::Target, Side::Target) => {
                    let (plus, minus) = if b.sign_at(p) == Sign::Plus { (p, q) } else { (q, p) };
                    ak.get(index(plus), index(minus)).clone()
                }
                (Side::Target, Side::Source) => unreachable!("arcs store the smaller end first"),
            };
            if v.is_zero() {
                return v;
            }
            entry *= v;
        }
        entry
    })
}

/// `∏ (1 + λ^k)` by direct rational arithmetic.
pub fn product_formula(lambda: &BigRational, exponents: &ScalarMultiset) -> BigRational {
    exponents.iter().fold(BigRational::one(), |acc, k| {
        let n: i32 = k.try_into().expect("small exponent");
        acc * (BigRational::one() + lambda.pow(n))
    })
}

pub fn rat(p: i64, q: i64) -> BigRational {
    BigRational::new(p.into(), q.into())
}
