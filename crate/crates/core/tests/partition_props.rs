//! Diagram arithmetic on `P_n`: products, floating components, hats, Green's relations and
//! permutational differences.

use proptest::prelude::*;
use twistcong::partition::{green, make_partition, normal_closure, pd, subgroup_contains, Green, NormalSubgroup, NsLabel, Partition, Permutation};

fn partition(n: usize) -> impl Strategy<Value = Partition> {
    let all = Partition::all(n);
    (0..all.len()).prop_map(move |k| all[k].clone())
}

fn permutation(n: usize) -> impl Strategy<Value = Permutation> {
    let all = Permutation::all(n);
    (0..all.len()).prop_map(move |k| all[k].clone())
}

/// An `H`-related pair of rank at least 2.
fn h_pair(n: usize) -> impl Strategy<Value = (Partition, Partition)> {
    let high: Vec<Partition> = Partition::all(n).into_iter().filter(|a| a.rank() >= 2).collect();
    (0..high.len(), any::<prop::sample::Index>()).prop_map(move |(k, pick)| {
        let a = high[k].clone();
        let class: Vec<&Partition> = high.iter().filter(|b| green(Green::H, &a, b)).collect();
        let b = class[pick.index(class.len())].clone();
        (a, b)
    })
}

#[test]
fn sizes_are_bell_numbers() {
    for (n, bell) in [(1, 2), (2, 15), (3, 203), (4, 4140)] {
        assert_eq!(Partition::all(n).len(), bell);
    }
}

#[test]
fn sample_product_in_p6() {
    let a = make_partition(6, &[vec![1, 4], vec![2, 3, -4, -5], vec![5, 6], vec![-1, -2, -6], vec![-3]]).unwrap();
    let b = make_partition(6, &[vec![1, 2], vec![3, 4, -1], vec![5, -4, -5, -6], vec![6], vec![-2, -3]]).unwrap();
    let ab = make_partition(6, &[vec![1, 4], vec![2, 3, -1, -4, -5, -6], vec![5, 6], vec![-2, -3]]).unwrap();
    assert_eq!(a.blocks().len(), 5);
    assert_eq!(a.rank(), 1);
    assert_eq!(a.multiply(&b).unwrap(), (ab, 1));
    let hat = make_partition(6, &[vec![1, 4], vec![2, 3], vec![5, 6], vec![-4, -5], vec![-1, -2, -6], vec![-3]]).unwrap();
    assert_eq!(a.hat(), hat);
}

#[test]
fn identity_and_singleton_products() {
    for n in 1..=3 {
        let id = Partition::identity(n);
        for a in Partition::all(n) {
            assert_eq!(a.multiply(&id).unwrap(), (a.clone(), 0));
            assert_eq!(id.multiply(&a).unwrap(), (a.clone(), 0));
        }
    }
    let s = Partition::singletons(2);
    assert_eq!(s.multiply(&s).unwrap(), (s.clone(), 2));
    assert!(Partition::identity(2).multiply(&Partition::identity(3)).is_err());
}

#[test]
fn d_classes_are_ranks() {
    for n in 1..=3 {
        let all = Partition::all(n);
        let mut reps: Vec<&Partition> = Vec::new();
        for a in &all {
            if !reps.iter().any(|r| green(Green::D, r, a)) {
                reps.push(a);
            }
        }
        assert_eq!(reps.len(), n + 1);
        let mut ranks: Vec<usize> = reps.iter().map(|r| r.rank()).collect();
        ranks.sort();
        assert_eq!(ranks, (0..=n).collect::<Vec<_>>());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(500))]

    #[test]
    fn product_is_associative_in_p3(a in partition(3), b in partition(3), c in partition(3)) {
        let (ab, p1) = a.multiply(&b).unwrap();
        let (ab_c, p2) = ab.multiply(&c).unwrap();
        let (bc, p3) = b.multiply(&c).unwrap();
        let (a_bc, p4) = a.multiply(&bc).unwrap();
        prop_assert_eq!(ab_c, a_bc);
        prop_assert_eq!(p1 + p2, p3 + p4);
    }

    #[test]
    fn product_is_associative_in_p4(a in partition(4), b in partition(4), c in partition(4)) {
        let (ab, p1) = a.multiply(&b).unwrap();
        let (ab_c, p2) = ab.multiply(&c).unwrap();
        let (bc, p3) = b.multiply(&c).unwrap();
        let (a_bc, p4) = a.multiply(&bc).unwrap();
        prop_assert_eq!(ab_c, a_bc);
        prop_assert_eq!(p1 + p2, p3 + p4);
    }

    #[test]
    fn hat_is_idempotent_rank_zero(a in partition(4)) {
        prop_assert_eq!(a.hat().hat(), a.hat());
        prop_assert_eq!(a.hat().rank(), 0);
    }

    #[test]
    fn blocks_round_trip(a in partition(4)) {
        prop_assert_eq!(make_partition(4, &a.blocks()).unwrap(), a);
    }

    #[test]
    fn relabel_is_product_with_units(a in partition(3), g in permutation(3), h in permutation(3)) {
        let (ug, uh) = (Partition::from_permutation(3, &g.inverse()), Partition::from_permutation(3, &h));
        let (ga, _) = ug.multiply(&a).unwrap();
        let (gah, _) = ga.multiply(&uh).unwrap();
        prop_assert_eq!(a.relabel(&g, &h), gah);
    }

    #[test]
    fn pd_membership_is_conjugation_invariant((a, b) in h_pair(4), g in permutation(4), h in permutation(4)) {
        let q = a.rank();
        let (p, p2) = (pd(&a, &b).unwrap(), pd(&a.relabel(&h, &g), &b.relabel(&h, &g)).unwrap());
        for label in [NsLabel::Trivial, NsLabel::Klein4, NsLabel::Alternating, NsLabel::Full] {
            if let Ok(n) = NormalSubgroup::new(q, label) {
                prop_assert_eq!(subgroup_contains(&n, &p), subgroup_contains(&n, &p2));
            }
        }
        prop_assert_eq!(normal_closure(&p), normal_closure(&p2));
    }
}
