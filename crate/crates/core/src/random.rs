//! Seeded random generators for words, bordisms, terms and matrices.
//!
//! Everything takes an explicit `Rng`, so a fixed seed reproduces a run.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::bordism::{Arc, Bordism, PairOrder, Port};
use crate::multiset::ScalarMultiset;
use crate::object::{BoundaryObject, Sign};
use crate::smc::Matrix;
use crate::term::{ObjExpr, Term};
use crate::trace::ThetaSpec;
use crate::Label;

pub fn seeded(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Size limits for generated bordisms.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Limits {
    pub max_len: usize,
    pub label_bound: i64,
    pub max_circles: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Self {
            max_len: 6,
            label_bound: 10,
            max_circles: 2,
        }
    }
}

pub fn sign<R: Rng + ?Sized>(rng: &mut R) -> Sign {
    if rng.gen_bool(0.5) {
        Sign::Plus
    } else {
        Sign::Minus
    }
}

pub fn label<R: Rng + ?Sized>(rng: &mut R, bound: i64) -> Label {
    BigInt::from(rng.gen_range(-bound..=bound))
}

/// A word of length `0..=max_len`.
pub fn word<R: Rng + ?Sized>(rng: &mut R, max_len: usize) -> BoundaryObject {
    let n = rng.gen_range(0..=max_len);
    word_of_len(rng, n)
}

pub fn word_of_len<R: Rng + ?Sized>(rng: &mut R, n: usize) -> BoundaryObject {
    (0..n).map(|_| sign(rng)).collect()
}

/// A random word with the given charge (`#+ − #−`), of length at most
/// `max_len` when possible and never shorter than `|charge|`.
pub fn word_with_charge<R: Rng + ?Sized>(rng: &mut R, charge: isize, max_len: usize) -> BoundaryObject {
    let min = charge.unsigned_abs();
    let len = if max_len <= min {
        min
    } else {
        let extra_pairs = rng.gen_range(0..=(max_len - min) / 2);
        min + 2 * extra_pairs
    };
    let plus = (len as isize + charge) as usize / 2;
    let mut signs: Vec<Sign> = (0..len)
        .map(|i| if i < plus { Sign::Plus } else { Sign::Minus })
        .collect();
    signs.shuffle(rng);
    BoundaryObject::new(signs)
}

pub fn circles<R: Rng + ?Sized>(rng: &mut R, max: usize, bound: i64) -> ScalarMultiset {
    let n = rng.gen_range(0..=max);
    (0..n).map(|_| label(rng, bound)).collect()
}

/// A uniformly random valid matching between `src` and `tgt`, or `None` if
/// their charges differ.
///
/// A port's polarity is its sign on the source side and the flipped sign on
/// the target side; arcs are exactly the pairs of opposite polarity.
pub fn bordism_between<R: Rng + ?Sized>(
    rng: &mut R,
    src: &BoundaryObject,
    tgt: &BoundaryObject,
    limits: &Limits,
) -> Option<Bordism> {
    let mut pos = Vec::new();
    let mut neg = Vec::new();
    for (i, &s) in src.signs().iter().enumerate() {
        match s {
            Sign::Plus => pos.push(Port::source(i)),
            Sign::Minus => neg.push(Port::source(i)),
        }
    }
    for (i, &s) in tgt.signs().iter().enumerate() {
        match s {
            Sign::Minus => pos.push(Port::target(i)),
            Sign::Plus => neg.push(Port::target(i)),
        }
    }
    if pos.len() != neg.len() {
        return None;
    }
    neg.shuffle(rng);
    let arcs: Vec<Arc> = pos
        .into_iter()
        .zip(neg)
        .map(|(p, q)| Arc::new(p, q, label(rng, limits.label_bound)))
        .collect();
    let c = circles(rng, limits.max_circles, limits.label_bound);
    Some(Bordism::new(src.clone(), tgt.clone(), arcs, c).expect("matching is valid"))
}

/// A random bordism out of `src` into a random target of matching charge.
pub fn bordism_from<R: Rng + ?Sized>(rng: &mut R, src: &BoundaryObject, limits: &Limits) -> Bordism {
    let tgt = word_with_charge(rng, src.charge(), limits.max_len);
    bordism_between(rng, src, &tgt, limits).expect("charges agree")
}

pub fn bordism<R: Rng + ?Sized>(rng: &mut R, limits: &Limits) -> Bordism {
    let src = word(rng, limits.max_len);
    bordism_from(rng, &src, limits)
}

pub fn endomorphism<R: Rng + ?Sized>(rng: &mut R, limits: &Limits) -> Bordism {
    let obj = word(rng, limits.max_len);
    bordism_between(rng, &obj, &obj, limits).expect("same word")
}

/// `(f, g)` with `f.tgt = g.src`.
pub fn composable_pair<R: Rng + ?Sized>(rng: &mut R, limits: &Limits) -> (Bordism, Bordism) {
    let f = bordism(rng, limits);
    let g = bordism_from(rng, f.tgt(), limits);
    (f, g)
}

/// `f: M -> N` and `g: N -> M`.
pub fn opposing_pair<R: Rng + ?Sized>(rng: &mut R, limits: &Limits) -> (Bordism, Bordism) {
    let f = bordism(rng, limits);
    let g = bordism_between(rng, f.tgt(), f.src(), limits).expect("charges agree");
    (f, g)
}

/// A random sign-preserving labelled permutation of `obj` (an
/// automorphism).
pub fn automorphism<R: Rng + ?Sized>(rng: &mut R, obj: &BoundaryObject, bound: i64) -> Bordism {
    let n = obj.len();
    let mut perm = vec![0; n];
    for s in [Sign::Plus, Sign::Minus] {
        let positions: Vec<usize> = (0..n).filter(|&i| obj[i] == s).collect();
        let mut shuffled = positions.clone();
        shuffled.shuffle(rng);
        for (i, j) in positions.into_iter().zip(shuffled) {
            perm[i] = j;
        }
    }
    let labels = (0..n).map(|_| label(rng, bound)).collect();
    Bordism::permutation(obj, &perm, labels).expect("valid permutation")
}

/// A random labelled permutation out of `src` (the target word is whatever
/// the permutation dictates).
pub fn labelled_permutation<R: Rng + ?Sized>(rng: &mut R, src: &BoundaryObject, bound: i64) -> Bordism {
    let mut perm: Vec<usize> = (0..src.len()).collect();
    perm.shuffle(rng);
    let labels = (0..src.len()).map(|_| label(rng, bound)).collect();
    Bordism::permutation(src, &perm, labels).expect("valid permutation")
}

pub fn theta_spec<R: Rng + ?Sized>(rng: &mut R, max_n: usize, bound: i64) -> ThetaSpec {
    let n = rng.gen_range(0..=max_n);
    ThetaSpec::new((0..n).map(|_| label(rng, bound)))
}

/// A small rational `p/q` with `|p| <= 3`, `1 <= q <= 3`.
pub fn rational<R: Rng + ?Sized>(rng: &mut R) -> BigRational {
    BigRational::new(rng.gen_range(-3i64..=3).into(), rng.gen_range(1i64..=3).into())
}

pub fn matrix<R: Rng + ?Sized>(rng: &mut R, rows: usize, cols: usize) -> Matrix {
    Matrix::from_fn(rows, cols, |_, _| rational(rng))
}

/// A random square matrix with nonzero determinant.
pub fn invertible_matrix<R: Rng + ?Sized>(rng: &mut R, dim: usize) -> Matrix {
    loop {
        let m = matrix(rng, dim, dim);
        if !m.determinant().expect("square").is_zero() {
            return m;
        }
    }
}

/// A random well-typed term with domain `dom`.
///
/// `depth` bounds nesting of `;` and `*`; intermediate boundary words stay
/// within `max_len` letters (or the length of `dom` if longer).
pub fn term<R: Rng + ?Sized>(rng: &mut R, dom: &BoundaryObject, depth: usize, max_len: usize) -> Term {
    let (t, _) = term_typed(rng, dom, depth, max_len.max(dom.len()), 4);
    t
}

fn term_typed<R: Rng + ?Sized>(
    rng: &mut R,
    dom: &BoundaryObject,
    depth: usize,
    max_len: usize,
    label_bound: i64,
) -> (Term, BoundaryObject) {
    let choice = if depth == 0 { 0 } else { rng.gen_range(0..4) };
    match choice {
        1 => {
            let (f, mid) = term_typed(rng, dom, depth - 1, max_len, label_bound);
            let (g, cod) = term_typed(rng, &mid, depth - 1, max_len, label_bound);
            (Term::seq(f, g), cod)
        }
        2 => {
            let cut = rng.gen_range(0..=dom.len());
            let (a, b) = dom.split_at(cut);
            let budget = max_len.saturating_sub(dom.len());
            let (f, fc) = term_typed(rng, &a, depth - 1, a.len() + budget / 2, label_bound);
            let (g, gc) = term_typed(rng, &b, depth - 1, b.len() + budget / 2, label_bound);
            (Term::par(f, g), fc.tensor(&gc))
        }
        3 if dom.len() + 2 <= max_len => {
            let cut = rng.gen_range(0..=dom.len());
            let (a, b) = dom.split_at(cut);
            let t = Term::par(Term::par(Term::id_word(&a), Term::Coev), Term::id_word(&b));
            let cod = a.tensor(&PairOrder::PlusMinus.word()).tensor(&b);
            (t, cod)
        }
        _ => atom(rng, dom, label_bound),
    }
}

/// A generator applied somewhere inside `dom`, padded with identities.
fn atom<R: Rng + ?Sized>(rng: &mut R, dom: &BoundaryObject, label_bound: i64) -> (Term, BoundaryObject) {
    let n = dom.len();
    let signs = dom.signs();
    let mut options: Vec<(usize, usize, Term, BoundaryObject)> = Vec::new();
    for i in 0..n {
        if signs[i] == Sign::Plus {
            options.push((i, 1, Term::Alpha(label(rng, label_bound)), BoundaryObject::plus()));
        }
        if i + 1 < n && signs[i] == Sign::Minus && signs[i + 1] == Sign::Plus {
            options.push((i, 2, Term::Ev, BoundaryObject::unit()));
        }
    }
    if n >= 2 {
        let i = rng.gen_range(0..n - 1);
        let a_len = rng.gen_range(1..=(n - i - 1).min(2));
        let b_len = rng.gen_range(1..=(n - i - a_len).min(2));
        let a = BoundaryObject::new(signs[i..i + a_len].to_vec());
        let b = BoundaryObject::new(signs[i + a_len..i + a_len + b_len].to_vec());
        let t = Term::Swap(ObjExpr::from_word(&a), ObjExpr::from_word(&b));
        options.push((i, a_len + b_len, t, b.tensor(&a)));
    }
    if options.is_empty() || rng.gen_range(0..5) == 0 {
        return (Term::id_word(dom), dom.clone());
    }
    let (i, len, t, out) = options.swap_remove(rng.gen_range(0..options.len()));
    let (pre, rest) = dom.split_at(i);
    let (_, post) = rest.split_at(len);
    let mut parts = Vec::new();
    if !pre.is_empty() {
        parts.push(Term::id_word(&pre));
    }
    parts.push(t);
    if !post.is_empty() {
        parts.push(Term::id_word(&post));
    }
    let cod = pre.tensor(&out).tensor(&post);
    (Term::par_all(parts).expect("nonempty"), cod)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::term::denote;

    #[test]
    fn seeded_runs_repeat() {
        let limits = Limits::default();
        let a: Vec<_> = {
            let mut rng = seeded(11);
            (0..20).map(|_| bordism(&mut rng, &limits)).collect()
        };
        let b: Vec<_> = {
            let mut rng = seeded(11);
            (0..20).map(|_| bordism(&mut rng, &limits)).collect()
        };
        assert_eq!(a, b);
    }

    #[test]
    fn charge_mismatch_has_no_bordism() {
        let mut rng = seeded(1);
        let src: BoundaryObject = "++".parse().unwrap();
        let tgt: BoundaryObject = "+-".parse().unwrap();
        assert!(bordism_between(&mut rng, &src, &tgt, &Limits::default()).is_none());
    }

    #[test]
    fn generated_words_have_requested_charge() {
        let mut rng = seeded(2);
        for c in -4isize..=4 {
            for _ in 0..10 {
                let w = word_with_charge(&mut rng, c, 6);
                assert_eq!(w.charge(), c);
                assert!(w.len() <= 6);
            }
        }
    }

    #[test]
    fn automorphisms_are_invertible_endomorphisms() {
        let mut rng = seeded(3);
        for _ in 0..50 {
            let w = word(&mut rng, 6);
            let a = automorphism(&mut rng, &w, 5);
            assert!(a.is_invertible());
            assert_eq!(a.src(), a.tgt());
        }
    }

    #[test]
    fn generated_terms_typecheck_from_their_domain() {
        let mut rng = seeded(4);
        for _ in 0..200 {
            let dom = word(&mut rng, 4);
            let t = term(&mut rng, &dom, 4, 6);
            let (d, _) = t.typecheck().unwrap_or_else(|e| panic!("{t}: {e}"));
            assert_eq!(d, dom);
            denote(&t).unwrap();
        }
    }

    #[test]
    fn invertible_matrices_invert() {
        let mut rng = seeded(5);
        for d in 1..=4 {
            let m = invertible_matrix(&mut rng, d);
            assert_eq!(m.mul(&m.inverse().unwrap()).unwrap(), Matrix::identity(d));
        }
    }
}
