mod common;

use std::sync::Arc;

use gvz_core::analysis::analyze;
use gvz_core::character::{CharacterTable, CyclotomicInt};
use gvz_core::group::{group_from_permutations, Group, Limits, QuotientMap, Subgroup};
use proptest::prelude::*;
use twofloat::TwoFloat;

fn permutation(degree: usize) -> impl Strategy<Value = Vec<usize>> {
    Just((0..degree).collect::<Vec<usize>>()).prop_shuffle()
}

fn perm_group(max_degree: usize) -> impl Strategy<Value = Group> {
    (2..=max_degree)
        .prop_flat_map(|d| prop::collection::vec(permutation(d), 1..=3).prop_map(move |gens| (d, gens)))
        .prop_map(|(d, gens)| group_from_permutations(d, &gens, &Limits::default()).unwrap())
}

fn cyclotomic() -> impl Strategy<Value = CyclotomicInt> {
    prop::sample::select(vec![1usize, 2, 3, 4, 5, 6, 8, 12])
        .prop_flat_map(|m| prop::collection::vec(-4i64..=4, m).prop_map(move |c| CyclotomicInt::new(m, c)))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn classes_partition_the_group(g in perm_group(6)) {
        let cc = g.classes();
        let total: usize = cc.sizes().iter().sum();
        prop_assert_eq!(total, g.order());
        for a in g.elements() {
            prop_assert!(cc.members(cc.class_of(a)).contains(&a));
            prop_assert_eq!(g.order() % cc.size(cc.class_of(a)), 0);
        }
        prop_assert_eq!(common::classes(&g).len(), cc.len());
    }

    #[test]
    fn center_is_the_commuting_set(g in perm_group(6)) {
        let z: Vec<usize> = g.center().elements().collect();
        prop_assert_eq!(&z, &common::center(&g));
        let cc = g.classes();
        let singletons = (0..cc.len()).filter(|&c| cc.size(c) == 1).count();
        prop_assert_eq!(singletons, z.len());
    }

    #[test]
    fn quotient_map_is_a_homomorphism(g in perm_group(6), seed in any::<prop::sample::Index>()) {
        let a = seed.index(g.order());
        let n = Subgroup::normal_closure(&g, [a]);
        let q = QuotientMap::new(&g, &n).unwrap();
        prop_assert_eq!(q.image().order() * n.order(), g.order());
        for x in g.elements() {
            for y in g.elements().step_by(7) {
                prop_assert_eq!(q.project(g.mul(x, y)), q.image().mul(q.project(x), q.project(y)));
            }
            prop_assert_eq!(q.project(x) == 0, n.contains(x));
        }
    }

    #[test]
    fn character_tables_are_valid(g in perm_group(5)) {
        let t = CharacterTable::compute(Arc::new(g.clone())).unwrap();
        t.verify().unwrap();
        prop_assert_eq!(t.len(), g.classes().len());
        prop_assert_eq!(t.degrees().iter().map(|d| d * d).sum::<usize>(), g.order());
    }

    #[test]
    fn four_oracles_agree(g in perm_group(5)) {
        let r = analyze(Arc::new(g)).unwrap();
        prop_assert!(r.agreement, "{:?}", r.failures());
        prop_assert!(r.failures().is_empty(), "{:?}", r.failures());
        for c in &r.characters {
            let s = c.sub_verdicts;
            prop_assert!(s.definition == s.degree && s.degree == s.commutator);
        }
    }
}

type Cdd = (TwoFloat, TwoFloat);

fn cmul(a: Cdd, b: Cdd) -> Cdd {
    (a.0 * b.0 - a.1 * b.1, a.0 * b.1 + a.1 * b.0)
}

/// `e^{2πi/m}` to double-double accuracy: the f64 value refined by Newton
/// steps on `z^m = 1`, which only need the exact-rounded `+ − × ÷`.
fn root_of_unity_dd(m: usize) -> Cdd {
    let theta = 2.0 * std::f64::consts::PI / m as f64;
    let mut z = (TwoFloat::from(theta.cos()), TwoFloat::from(theta.sin()));
    for _ in 0..3 {
        let mut zm1 = (TwoFloat::from(1.0), TwoFloat::from(0.0));
        for _ in 0..m - 1 {
            zm1 = cmul(zm1, z);
        }
        let zm = cmul(zm1, z);
        // z − (z^m − 1) / (m z^{m−1})
        let num = (zm.0 - TwoFloat::from(1.0), zm.1);
        let den = (zm1.0 * TwoFloat::from(m as f64), zm1.1 * TwoFloat::from(m as f64));
        let norm = den.0 * den.0 + den.1 * den.1;
        let q = (
            (num.0 * den.0 + num.1 * den.1) / norm,
            (num.1 * den.0 - num.0 * den.1) / norm,
        );
        z = (z.0 - q.0, z.1 - q.1);
    }
    z
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn ring_axioms(a in cyclotomic(), b in cyclotomic(), c in cyclotomic()) {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert!((&a + &(-&a)).is_zero());
        prop_assert!((&a - &a).is_zero());
        prop_assert_eq!(&a * &CyclotomicInt::from_int(1), a.clone());
        prop_assert_eq!((&a * &b).conj(), &a.conj() * &b.conj());
        prop_assert_eq!(a.lift(a.conductor() * 3), a.clone());
    }

    #[test]
    fn dump_round_trips(a in cyclotomic()) {
        let parsed: CyclotomicInt = a.to_string().parse().unwrap();
        prop_assert_eq!(parsed.coeffs(), a.coeffs());
    }

    #[test]
    fn zero_test_matches_double_double(a in cyclotomic(), vanish in any::<bool>(), p in prop::sample::select(vec![2usize, 3, 5])) {
        // Multiplying by 1 + ζ_p + ... + ζ_p^{p-1} = 0 hides a zero behind
        // nonzero coefficients.
        let a = if vanish {
            let s = (0..p).fold(CyclotomicInt::zero(), |acc, k| &acc + &CyclotomicInt::root_of_unity(p, k));
            &a * &s
        } else {
            a
        };
        let zeta = root_of_unity_dd(a.conductor());
        let (mut re, mut im) = (TwoFloat::from(0.0), TwoFloat::from(0.0));
        let mut power = (TwoFloat::from(1.0), TwoFloat::from(0.0));
        for &c in a.coeffs() {
            re += power.0 * TwoFloat::from(c as f64);
            im += power.1 * TwoFloat::from(c as f64);
            power = cmul(power, zeta);
        }
        let small = re.abs() < 1e-15 && im.abs() < 1e-15;
        prop_assert_eq!(a.is_zero(), small, "{} = ({:?}, {:?})", a, re, im);
    }

    #[test]
    fn norm_squared_is_real_and_nonnegative(a in cyclotomic()) {
        let n = a.norm_squared();
        prop_assert_eq!(n.conj(), n.clone());
        let (re, im) = n.to_complex();
        prop_assert!(im.abs() < 1e-9 && re > -1e-9);
        prop_assert_eq!(n.is_zero(), a.is_zero());
    }
}

#[test]
fn vanishing_sums_of_roots_are_zero() {
    for m in [2usize, 3, 5, 6, 12] {
        let sum = (0..m).fold(CyclotomicInt::zero(), |acc, k| {
            &acc + &CyclotomicInt::root_of_unity(m, k)
        });
        assert!(sum.is_zero(), "{m}");
    }
    let i = CyclotomicInt::root_of_unity(4, 1);
    assert_eq!(&i * &i, CyclotomicInt::from_int(-1));
    let w = CyclotomicInt::root_of_unity(3, 1);
    assert_eq!(&w * &w, &(&CyclotomicInt::from_int(-1) - &w) + &CyclotomicInt::zero());
}
