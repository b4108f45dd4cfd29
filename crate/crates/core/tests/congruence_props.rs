mod common;

use common::{congruence_set, congruences_by_filter, labels_of, set_partitions};
use mnlab::congruence::{
    all_congruences, congruences_oracle, galois_closure, generated_sublattice, is_closed_system, is_realizable,
    preserving_maps, principal_congruence,
};
use mnlab::{Partition, UnaryAlgebra};
use proptest::prelude::*;

fn arb_algebra(max_size: usize, max_ops: usize) -> impl Strategy<Value = UnaryAlgebra> {
    (1..=max_size).prop_flat_map(move |n| {
        prop::collection::vec(prop::collection::vec(0..n as u32, n), 0..=max_ops)
            .prop_map(move |ops| UnaryAlgebra::new(n, ops).unwrap())
    })
}

fn arb_partition(n: usize) -> impl Strategy<Value = Partition> {
    prop::collection::vec(0..n as u32, n).prop_map(|labels| Partition::from_labels(&labels))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn congruences_match_filter(alg in arb_algebra(6, 3)) {
        prop_assert_eq!(congruence_set(&alg), congruences_by_filter(alg.size(), alg.ops()));
    }

    #[test]
    fn library_oracle_agrees(alg in arb_algebra(6, 2)) {
        let fast = all_congruences(&alg).unwrap();
        let slow = congruences_oracle(&alg).unwrap();
        prop_assert_eq!(fast.partitions, slow.partitions);
    }

    #[test]
    fn principal_is_least_containing_pair(alg in arb_algebra(6, 2), a in 0usize..6, b in 0usize..6) {
        let n = alg.size();
        let (a, b) = (a % n, b % n);
        let cg = labels_of(&principal_congruence(&alg, a, b).unwrap());
        let containing: Vec<Vec<usize>> = congruences_by_filter(n, alg.ops())
            .into_iter()
            .filter(|l| l[a] == l[b])
            .collect();
        let least: Vec<usize> = (0..n)
            .map(|x| (0..n).find(|&y| containing.iter().all(|l| l[x] == l[y])).unwrap())
            .collect();
        prop_assert_eq!(Partition::from_labels(&cg), Partition::from_labels(&least));
    }

    #[test]
    fn expansion_never_adds_congruences(alg in arb_algebra(5, 2), extra in prop::collection::vec(0u32..5, 5)) {
        let n = alg.size();
        let op: Vec<u32> = extra[..n].iter().map(|&x| x % n as u32).collect();
        let bigger = alg.with_op(op).unwrap();
        let small = congruence_set(&alg);
        prop_assert!(congruence_set(&bigger).is_subset(&small));
    }

    #[test]
    fn meet_and_join_match_relations(a in arb_partition(6), b in arb_partition(6)) {
        let m = a.meet(&b);
        let j = a.join(&b);
        for x in 0..6 {
            for y in 0..6 {
                prop_assert_eq!(m.same_block(x, y), a.same_block(x, y) && b.same_block(x, y));
            }
        }
        prop_assert!(a.refines(&j) && b.refines(&j));
        // the join is the least upper bound among all partitions
        for c in set_partitions(6) {
            let c = Partition::from_labels(&c);
            if a.refines(&c) && b.refines(&c) {
                prop_assert!(j.refines(&c));
            }
        }
    }

    #[test]
    fn galois_closure_is_extensive_and_idempotent(parts in prop::collection::vec(arb_partition(4), 1..3)) {
        let closed = galois_closure(4, &parts).unwrap();
        for p in &parts {
            prop_assert!(closed.position(p).is_some());
        }
        let again = galois_closure(4, &closed.partitions).unwrap();
        prop_assert_eq!(&again.partitions, &closed.partitions);
        prop_assert_eq!(is_closed_system(4, &parts).unwrap(), is_realizable(4, &parts).unwrap());
    }
}

#[test]
fn preserving_maps_match_brute_force() {
    let parts = [
        Partition::from_rgs(vec![0, 0, 1, 1]).unwrap(),
        Partition::from_rgs(vec![0, 1, 0, 1]).unwrap(),
    ];
    let mut brute = Vec::new();
    for code in 0..256u32 {
        let f: Vec<u32> = (0..4).map(|i| (code >> (2 * i)) & 3).collect();
        let ok = parts.iter().all(|p| {
            (0..4).all(|x| (0..4).all(|y| !p.same_block(x, y) || p.same_block(f[x] as usize, f[y] as usize)))
        });
        if ok {
            brute.push(f);
        }
    }
    brute.sort();
    assert_eq!(preserving_maps(4, &parts).unwrap(), brute);
}

#[test]
fn generated_sublattice_of_two_complements() {
    let parts = [
        Partition::from_rgs(vec![0, 0, 1, 1]).unwrap(),
        Partition::from_rgs(vec![0, 1, 0, 1]).unwrap(),
    ];
    let sub = generated_sublattice(4, &parts).unwrap();
    assert_eq!(sub.len(), 4);
    assert!(sub.contains(&Partition::discrete(4)));
    assert!(sub.contains(&Partition::indiscrete(4)));
}

#[test]
fn partition_counts_are_bell_numbers() {
    let bells = [1usize, 1, 2, 5, 15, 52, 203, 877];
    for (n, &b) in bells.iter().enumerate() {
        assert_eq!(Partition::all(n).count(), b);
        assert_eq!(set_partitions(n).len(), b);
    }
}
