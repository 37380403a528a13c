use num_integer::Integer;
use proptest::prelude::*;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use pos_groups::constructions::{build_c2a_m21, build_c6_c7, build_remark_p5, build_theorem32};
use pos_groups::groups::{
    close_generators, make_twisted, CyclicGroup, DirectProduct, EnumerationBudget, FiniteGroup,
    Group, Permutation, PermutationGroup,
};
use pos_groups::numtheory::{euler_phi, factorize, multiplicative_order, pow_mod};
use pos_groups::spectra::{frobenius_check, order_spectrum, phi_divisibility_check};

const BUDGET: EnumerationBudget = EnumerationBudget {
    max_elements: 10_000,
};

fn subjects() -> Vec<(String, FiniteGroup)> {
    let mut v: Vec<(String, FiniteGroup)> = Vec::new();
    for n in [1, 2, 12, 97, 360, 1024, 2000] {
        v.push((format!("C_{n}"), CyclicGroup::new(n).unwrap().into()));
    }
    for (m, n, z) in [(6, 7, 2), (4, 5, 2), (2, 9, 8), (10, 11, 2), (3, 13, 3)] {
        v.push((
            format!("twisted {m},{n},{z}"),
            make_twisted(m, n, z).unwrap().into(),
        ));
    }
    for (p, a, b) in [(3, 2, 2), (5, 2, 1), (5, 3, 2), (17, 4, 1)] {
        v.push((
            format!("thm32 {p},{a},{b}"),
            build_theorem32(p, a, b).unwrap().0.into(),
        ));
    }
    v.push((
        "remark5 3,2".into(),
        build_remark_p5(3, 2).unwrap().0.into(),
    ));
    v.push(("c6c7".into(), build_c6_c7().0.into()));
    for a in 1..=4 {
        let d = build_c2a_m21(a).unwrap();
        let g = DirectProduct::new(
            FiniteGroup::from(d.left().clone()),
            FiniteGroup::from(d.right().clone()),
        );
        v.push((format!("c2am21 {a}"), g.into()));
    }
    for n in 1..=6 {
        v.push((format!("S_{n}"), PermutationGroup::symmetric(n).into()));
        v.push((format!("A_{n}"), PermutationGroup::alternating(n).into()));
    }
    let r = Permutation::new(vec![1, 2, 3, 4, 5, 0]).unwrap();
    let s = Permutation::new(vec![0, 5, 4, 3, 2, 1]).unwrap();
    v.push((
        "D_6".into(),
        close_generators(6, vec![r, s], BUDGET).unwrap().into(),
    ));
    let mixed = DirectProduct::new(
        FiniteGroup::from(make_twisted(6, 7, 2).unwrap()),
        FiniteGroup::from(PermutationGroup::symmetric(3)),
    );
    v.push(("c6c7 x S_3".into(), mixed.into()));
    v
}

#[test]
fn group_axioms_on_sampled_triples() {
    let mut rng = StdRng::seed_from_u64(0x5eed);
    for (name, g) in subjects() {
        let elements: Vec<_> = g.enumerate(BUDGET).unwrap().collect();
        assert!(elements.len() <= 2000, "{name}");
        let e = g.identity();
        for x in &elements {
            assert!(g.contains(x), "{name}: {x:?}");
            assert_eq!(g.op(&e, x), *x, "{name}: left identity");
            assert_eq!(g.op(x, &e), *x, "{name}: right identity");
            let inv = g.inverse(x);
            assert!(
                g.is_identity(&g.op(x, &inv)),
                "{name}: right inverse of {x:?}"
            );
            assert!(
                g.is_identity(&g.op(&inv, x)),
                "{name}: left inverse of {x:?}"
            );
        }
        for _ in 0..10_000 {
            let [a, b, c] = [0; 3].map(|_| &elements[rng.gen_range(0..elements.len())]);
            assert_eq!(
                g.op(&g.op(a, b), c),
                g.op(a, &g.op(b, c)),
                "{name}: associativity at {a:?}, {b:?}, {c:?}"
            );
        }
    }
}

#[test]
fn invariants_on_every_subject() {
    for (name, g) in subjects() {
        let s = order_spectrum(&g, BUDGET).unwrap();
        assert_eq!(s.total(), g.cardinality(), "{name}");
        assert!(phi_divisibility_check(&s).is_empty(), "{name}");
        assert!(frobenius_check(&g, BUDGET).unwrap().is_empty(), "{name}");
        for (order, _) in s.iter() {
            assert!(
                (&g.cardinality() % order).bits() == 0,
                "{name}: order {order}"
            );
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(512))]

    #[test]
    fn factorization_reconstructs(n in 1u64..=1_000_000_000_000) {
        let f = factorize(n).unwrap();
        prop_assert_eq!(f.value(), Some(n));
        let mut last = 1;
        for &(p, e) in f.pairs() {
            prop_assert!(p > last && e > 0);
            last = p;
        }
    }

    #[test]
    fn order_divides_phi(m in 2u64..100_000, z in 1u64..100_000) {
        prop_assume!(z.gcd(&m) == 1);
        let ord = multiplicative_order(z, m).unwrap();
        prop_assert_eq!(euler_phi(m).unwrap() % ord, 0);
        prop_assert_eq!(pow_mod(z, ord, m), 1 % m);
    }

    #[test]
    fn power_matches_repeated_product(x in 0u64..6, y in 0u64..7, k in 0u64..200) {
        let (g, _) = build_c6_c7();
        let x = (x, y);
        let mut acc = g.identity();
        for _ in 0..k {
            acc = g.op(&acc, &x);
        }
        prop_assert_eq!(g.pow(&x, k), acc);
    }

    #[test]
    fn permutation_composition_is_associative(
        a in permutation(9),
        b in permutation(9),
        c in permutation(9),
    ) {
        prop_assert_eq!(a.then(&b).then(&c), a.then(&b.then(&c)));
        prop_assert_eq!(a.then(&a.inverse()), Permutation::identity(9));
        prop_assert_eq!(a.then(&b).is_even(), a.is_even() == b.is_even());
    }
}

fn permutation(degree: u32) -> impl Strategy<Value = Permutation> {
    Just((0..degree).collect::<Vec<u32>>())
        .prop_shuffle()
        .prop_map(|images| Permutation::new(images).unwrap())
}
