mod common;

use proptest::prelude::*;

use cobord::random::{self, Limits};
use cobord::{Arc, Bordism, BoundaryObject, PairOrder, Port, ScalarMultiset};
use common::{compose_by_walking, permutation_cycle_sums};

fn w(s: &str) -> BoundaryObject {
    s.parse().unwrap()
}

const LIM: Limits = Limits {
    max_len: 8,
    label_bound: 10,
    max_circles: 2,
};

#[test]
fn worked_figure_gluing() {
    let f = Bordism::new(
        w("+"),
        w("++-"),
        [
            Arc::new(Port::source(0), Port::target(0), 2),
            Arc::new(Port::target(1), Port::target(2), -1),
        ],
        ScalarMultiset::new(),
    )
    .unwrap();
    let g = Bordism::new(
        w("++-"),
        w("++-"),
        [
            Arc::new(Port::source(0), Port::target(0), 0),
            Arc::new(Port::source(1), Port::source(2), 0),
            Arc::new(Port::target(1), Port::target(2), 1),
        ],
        ScalarMultiset::new(),
    )
    .unwrap();
    let fg = f.compose(&g).unwrap();
    assert_eq!(fg.to_string(), "src=+; tgt=++-; arcs=[(s0,t0,2),(t1,t2,1)]; circles=[-1]");
    assert_eq!(Some(fg), compose_by_walking(&f, &g));
}

#[test]
fn cup_then_cap_is_an_unlabelled_circle() {
    for order in [PairOrder::PlusMinus, PairOrder::MinusPlus] {
        let c = Bordism::cup(order).compose(&Bordism::cap(order)).unwrap();
        assert_eq!(c, Bordism::circle(0));
        assert_eq!(Some(c), compose_by_walking(&Bordism::cup(order), &Bordism::cap(order)));
    }
}

#[test]
fn zigzags_for_every_short_word() {
    for n in 0..=6 {
        for bits in 0..(1u32 << n) {
            let x: BoundaryObject = (0..n)
                .map(|i| if bits >> i & 1 == 1 { cobord::Sign::Plus } else { cobord::Sign::Minus })
                .collect();
            let d = Bordism::duality_data(&x);
            let idx = Bordism::identity(&x);
            let idy = Bordism::identity(&d.dual);
            let left = d.coev.tensor(&idx).compose(&idx.tensor(&d.ev)).unwrap();
            let right = idy.tensor(&d.coev).compose(&d.ev.tensor(&idy)).unwrap();
            assert_eq!(left, idx, "{x}");
            assert_eq!(right, idy, "{x}");
        }
    }
}

#[test]
fn closing_alpha_gives_its_label() {
    for k in -4..=4 {
        assert_eq!(Bordism::alpha(k).trace_close().unwrap(), Bordism::circle(k));
    }
    assert_eq!(
        Bordism::identity(&w("+")).trace_close().unwrap(),
        Bordism::circle(0)
    );
    assert!(Bordism::cup(PairOrder::PlusMinus).trace_close().is_err());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn compose_matches_walking_oracle(seed in any::<u64>()) {
        let mut rng = random::seeded(seed);
        let (f, g) = random::composable_pair(&mut rng, &LIM);
        prop_assert_eq!(Some(f.compose(&g).unwrap()), compose_by_walking(&f, &g));
    }

    #[test]
    fn associativity(seed in any::<u64>()) {
        let mut rng = random::seeded(seed);
        let (f, g) = random::composable_pair(&mut rng, &LIM);
        let h = random::bordism_from(&mut rng, g.tgt(), &LIM);
        prop_assert_eq!(
            f.compose(&g).unwrap().compose(&h).unwrap(),
            f.compose(&g.compose(&h).unwrap()).unwrap()
        );
    }

    #[test]
    fn interchange_via_oracle(seed in any::<u64>()) {
        let mut rng = random::seeded(seed);
        let small = Limits { max_len: 4, ..LIM };
        let (f, h) = random::composable_pair(&mut rng, &small);
        let (g, k) = random::composable_pair(&mut rng, &small);
        let lhs = compose_by_walking(&f.tensor(&g), &h.tensor(&k)).unwrap();
        let rhs = compose_by_walking(&f, &h).unwrap().tensor(&compose_by_walking(&g, &k).unwrap());
        prop_assert_eq!(&lhs, &rhs);
        prop_assert_eq!(lhs, f.tensor(&g).compose(&h.tensor(&k)).unwrap());
    }

    #[test]
    fn units(seed in any::<u64>()) {
        let mut rng = random::seeded(seed);
        let f = random::bordism(&mut rng, &LIM);
        prop_assert_eq!(&Bordism::identity(f.src()).compose(&f).unwrap(), &f);
        prop_assert_eq!(&f.compose(&Bordism::identity(f.tgt())).unwrap(), &f);
        prop_assert_eq!(&f.tensor(&Bordism::empty()), &f);
        prop_assert_eq!(&Bordism::empty().tensor(&f), &f);
    }

    #[test]
    fn swap_is_natural_and_involutive(seed in any::<u64>()) {
        let mut rng = random::seeded(seed);
        let small = Limits { max_len: 4, ..LIM };
        let f = random::bordism(&mut rng, &small);
        let g = random::bordism(&mut rng, &small);
        prop_assert_eq!(
            f.tensor(&g).compose(&Bordism::swap(f.tgt(), g.tgt())).unwrap(),
            Bordism::swap(f.src(), g.src()).compose(&g.tensor(&f)).unwrap()
        );
        let (a, b) = (f.src(), g.src());
        prop_assert_eq!(
            Bordism::swap(a, b).compose(&Bordism::swap(b, a)).unwrap(),
            Bordism::identity(&a.tensor(b))
        );
    }

    #[test]
    fn closure_of_permutation_is_cycle_sums(seed in any::<u64>()) {
        let mut rng = random::seeded(seed);
        let obj = random::word(&mut rng, 8);
        let p = random::automorphism(&mut rng, &obj, 10);
        let mut perm = vec![0; obj.len()];
        let mut labels = vec![num_bigint::BigInt::from(0); obj.len()];
        for a in p.arcs() {
            let (s, t) = a.ends();
            perm[s.index] = t.index;
            labels[s.index] = a.label().clone();
        }
        let expected = permutation_cycle_sums(&perm, &labels);
        prop_assert_eq!(p.trace_close().unwrap(), Bordism::closed(expected.clone()));
        prop_assert_eq!(p.trace_close_direct().unwrap(), Bordism::closed(expected));
    }

    #[test]
    fn closure_paths_agree(seed in any::<u64>()) {
        let mut rng = random::seeded(seed);
        let b = random::endomorphism(&mut rng, &LIM);
        prop_assert_eq!(b.trace_close().unwrap(), b.trace_close_direct().unwrap());
    }

    #[test]
    fn cyclicity(seed in any::<u64>()) {
        let mut rng = random::seeded(seed);
        let (f, g) = random::opposing_pair(&mut rng, &Limits { max_len: 6, ..LIM });
        prop_assert_eq!(
            f.compose(&g).unwrap().trace_close().unwrap(),
            g.compose(&f).unwrap().trace_close().unwrap()
        );
    }

    #[test]
    fn inverses(seed in any::<u64>()) {
        let mut rng = random::seeded(seed);
        let src = random::word(&mut rng, 8);
        let p = random::labelled_permutation(&mut rng, &src, 10);
        prop_assert!(p.is_invertible());
        let inv = p.inverse().unwrap();
        prop_assert_eq!(p.compose(&inv).unwrap(), Bordism::identity(p.src()));
        prop_assert_eq!(inv.compose(&p).unwrap(), Bordism::identity(p.tgt()));
    }

    #[test]
    fn only_permutations_are_invertible(seed in any::<u64>()) {
        let mut rng = random::seeded(seed);
        let b = random::bordism(&mut rng, &LIM);
        let through_only = b.arcs().iter().all(|a| a.kind() == cobord::ArcKind::Through);
        prop_assert_eq!(b.is_invertible(), through_only && b.circles().is_empty());
        if let Some(inv) = b.inverse() {
            prop_assert_eq!(b.compose(&inv).unwrap(), Bordism::identity(b.src()));
        }
    }

    #[test]
    fn scalars_form_the_free_commutative_monoid(
        a in prop::collection::vec(-10i64..=10, 0..5),
        b in prop::collection::vec(-10i64..=10, 0..5),
    ) {
        let ma: ScalarMultiset = a.iter().copied().collect();
        let mb: ScalarMultiset = b.iter().copied().collect();
        let (x, y) = (Bordism::closed(ma.clone()), Bordism::closed(mb.clone()));
        prop_assert_eq!(x.compose(&y).unwrap(), x.tensor(&y));
        prop_assert_eq!(x.tensor(&y), y.tensor(&x));
        let sum = &ma + &mb;
        prop_assert_eq!(x.tensor(&y).circles().clone(), sum);
        // Scalars are central: they commute past any morphism.
        let f = Bordism::alpha(3);
        prop_assert_eq!(f.tensor(&x), x.tensor(&f));
    }

    #[test]
    fn serialization_is_canonical(seed in any::<u64>()) {
        let mut rng = random::seeded(seed);
        let b = random::bordism(&mut rng, &LIM);
        let rebuilt = Bordism::new(
            b.src().clone(),
            b.tgt().clone(),
            b.arcs().iter().rev().cloned(),
            b.circles().clone(),
        ).unwrap();
        prop_assert_eq!(rebuilt.to_string(), b.to_string());
    }
}
