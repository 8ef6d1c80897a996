mod common;

use num_bigint::BigInt;
use num_integer::Integer;
use proptest::prelude::*;

use cobord::random;
use cobord::term::normalize;
use cobord::trace::{
    act_on_theta, classify_scalar, find_generating_witness, theta_of_endomorphism, AutomorphismPoint,
    Generation, Obstruction, ThetaSpec,
};
use cobord::{Bordism, BoundaryObject, ScalarMultiset, Sign};
use common::permutation_cycle_sums;

fn ms(xs: &[i64]) -> ScalarMultiset {
    xs.iter().copied().collect()
}

/// `perm^k` as a labelled permutation, walking each strand `k` times.
fn power(perm: &[usize], labels: &[BigInt], k: usize) -> (Vec<usize>, Vec<BigInt>) {
    let n = perm.len();
    let mut p = vec![0; n];
    let mut l = vec![BigInt::from(0); n];
    for s in 0..n {
        let mut i = s;
        for _ in 0..k {
            l[s] += &labels[i];
            i = perm[i];
        }
        p[s] = i;
    }
    (p, l)
}

fn perm_of(b: &Bordism) -> (Vec<usize>, Vec<BigInt>) {
    let n = b.src().len();
    let mut perm = vec![0; n];
    let mut labels = vec![BigInt::from(0); n];
    for a in b.arcs() {
        let (s, t) = a.ends();
        perm[s.index] = t.index;
        labels[s.index] = a.label().clone();
    }
    (perm, labels)
}

#[test]
fn theta_at_the_generator() {
    let p = AutomorphismPoint::from_labels(&[BigInt::from(1)]);
    for exps in [&[3, 0, -2][..], &[1], &[], &[5, 5, -1]] {
        let spec = ThetaSpec::new(exps.iter().copied());
        assert_eq!(act_on_theta(&p, &spec), ms(exps));
    }
}

#[test]
fn cycles_split_by_gcd() {
    // A 2-cycle with label sum p+q.
    let p = AutomorphismPoint::from_cycles(&[(2, BigInt::from(5))]);
    assert_eq!(act_on_theta(&p, &ThetaSpec::new([1])), ms(&[5]));
    assert_eq!(act_on_theta(&p, &ThetaSpec::new([2])), ms(&[5, 5]));
    assert_eq!(act_on_theta(&p, &ThetaSpec::new([3])), ms(&[15]));
    assert_eq!(act_on_theta(&p, &ThetaSpec::new([-2])), ms(&[-5, -5]));
    assert_eq!(act_on_theta(&p, &ThetaSpec::new([0])), ms(&[0, 0]));
    // gcd(2,2) = 2 circles of label 1: the exponent-2 image contains {1}.
    let q = AutomorphismPoint::from_cycles(&[(2, BigInt::from(1))]);
    assert_eq!(act_on_theta(&q, &ThetaSpec::new([2])), ms(&[1, 1]));
}

#[test]
fn trace_of_closed_terms() {
    let b = normalize("a^1").unwrap();
    assert_eq!(theta_of_endomorphism(&b, &ThetaSpec::new([3, 0, -2])).unwrap(), ms(&[-2, 0, 3]));
    let c = normalize("coev ; swap(+,-) ; ev").unwrap();
    assert_eq!(classify_scalar(&c).unwrap(), ms(&[0]));
    assert!(classify_scalar(&Bordism::alpha(1)).is_err());
    // Non-invertible endomorphisms are rejected for negative exponents only.
    let cc = normalize("swap(+,-) ; ev ; coev").unwrap();
    assert!(theta_of_endomorphism(&cc, &ThetaSpec::new([-1])).is_err());
    assert!(theta_of_endomorphism(&cc, &ThetaSpec::new([1])).is_ok());
}

#[test]
fn generation_examples() {
    for t in [ms(&[]), ms(&[1]), ms(&[-4, 0, 7]), ms(&[2, 2, 2])] {
        for k in [1, -1] {
            let spec = ThetaSpec::new([k]);
            let g = find_generating_witness(&spec, &t, 5);
            let w = g.witness().expect("theta[±1] generates");
            assert_eq!(act_on_theta(w, &spec), t);
        }
    }
    assert!(matches!(
        find_generating_witness(&ThetaSpec::new([2]), &ms(&[1]), 5),
        Generation::Obstructed(Obstruction::Divisibility { .. })
    ));
    assert!(matches!(
        find_generating_witness(&ThetaSpec::new([1, 1]), &ms(&[3]), 5),
        Generation::Obstructed(Obstruction::ComponentCount { .. })
    ));
    assert!(matches!(
        find_generating_witness(&ThetaSpec::default(), &ms(&[3]), 5),
        Generation::Obstructed(Obstruction::EmptySpec)
    ));
    // {1,1} is reachable at exponent 2 through a 2-cycle, despite 2 ∤ 1.
    let g = find_generating_witness(&ThetaSpec::new([2]), &ms(&[1, 1]), 5);
    assert_eq!(act_on_theta(g.witness().unwrap(), &ThetaSpec::new([2])), ms(&[1, 1]));
    // theta[1,1] reaches {a,b} through two fixed points.
    let g = find_generating_witness(&ThetaSpec::new([1, 1]), &ms(&[3, 3]), 5);
    assert_eq!(act_on_theta(g.witness().unwrap(), &ThetaSpec::new([1, 1])), ms(&[3, 3]));
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn theta_matches_permutation_powers(seed in any::<u64>()) {
        let mut rng = random::seeded(seed);
        let n = rand::Rng::gen_range(&mut rng, 0..=6);
        let obj: BoundaryObject = std::iter::repeat(Sign::Plus).take(n).collect();
        let b = random::automorphism(&mut rng, &obj, 6);
        let spec = random::theta_spec(&mut rng, 3, 4);
        let (perm, labels) = perm_of(&b);
        let point = AutomorphismPoint::new(b).unwrap();
        let mut expected = ScalarMultiset::new();
        for k in spec.exponents().iter() {
            let kk: i64 = k.try_into().unwrap();
            let (p, l) = power(&perm, &labels, kk.unsigned_abs() as usize);
            let sums = permutation_cycle_sums(&p, &l);
            for s in sums.iter() {
                expected.insert(if kk < 0 { -s } else { s.clone() });
            }
        }
        prop_assert_eq!(act_on_theta(&point, &spec), expected);
    }

    #[test]
    fn theta_is_conjugation_invariant(seed in any::<u64>()) {
        let mut rng = random::seeded(seed);
        let obj = random::word(&mut rng, 6);
        let point = AutomorphismPoint::new(random::automorphism(&mut rng, &obj, 6)).unwrap();
        let u = random::labelled_permutation(&mut rng, &obj, 6);
        let spec = random::theta_spec(&mut rng, 3, 4);
        let conj = point.conjugate(&u).unwrap();
        prop_assert_eq!(act_on_theta(&conj, &spec), act_on_theta(&point, &spec));
    }

    #[test]
    fn gcd_rule_on_single_cycles(m in 1usize..=6, sum in -6i64..=6, k in -6i64..=6) {
        let point = AutomorphismPoint::from_cycles(&[(m, BigInt::from(sum))]);
        let got = act_on_theta(&point, &ThetaSpec::new([k]));
        let g = if k == 0 { m } else { (m as i64).gcd(&k) as usize };
        let each = (k / g as i64) * sum;
        prop_assert_eq!(got, std::iter::repeat(each).take(g).collect::<ScalarMultiset>());
    }

    #[test]
    fn witnesses_are_correct(seed in any::<u64>()) {
        let mut rng = random::seeded(seed);
        let spec = random::theta_spec(&mut rng, 2, 3);
        let len = rand::Rng::gen_range(&mut rng, 0..=3);
        let target: ScalarMultiset = (0..len).map(|_| random::label(&mut rng, 3)).collect();
        match find_generating_witness(&spec, &target, 3) {
            Generation::Witness(p) => prop_assert_eq!(act_on_theta(&p, &spec), target),
            Generation::Obstructed(Obstruction::ComponentCount { .. }) => {
                prop_assert!(target.len() < spec.len())
            }
            _ => {}
        }
    }
}
