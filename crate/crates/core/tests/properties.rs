mod common;

use dimonoid::catalog::enumerate_semigroups;
use dimonoid::morphisms::{canonical_form, for_each_permutation};
use dimonoid::{automorphisms, DiTable, OpTable, Permutation};
use proptest::prelude::*;
use proptest::sample::Index;

/// Arbitrary (mostly non-associative) tables of order 1..=5.
fn any_table() -> impl Strategy<Value = OpTable> {
    (1usize..=5).prop_flat_map(|n| {
        proptest::collection::vec(0..n, n * n).prop_map(move |e| OpTable::new(n, e).unwrap())
    })
}

fn any_pair() -> impl Strategy<Value = DiTable> {
    (1usize..=4).prop_flat_map(|n| {
        let table = move || proptest::collection::vec(0..n, n * n);
        (table(), table()).prop_map(move |(l, r)| {
            DiTable::pair(OpTable::new(n, l).unwrap(), OpTable::new(n, r).unwrap()).unwrap()
        })
    })
}

fn semigroups_up_to_3() -> Vec<OpTable> {
    (1..=3)
        .flat_map(|n| enumerate_semigroups(n).unwrap())
        .collect()
}

fn permutation(n: usize, seed: &[Index]) -> Permutation {
    let mut rest: Vec<usize> = (0..n).collect();
    let images = seed[..n]
        .iter()
        .map(|i| rest.remove(i.index(rest.len())))
        .collect();
    Permutation::new(images).unwrap()
}

proptest! {
    #[test]
    fn dual_is_an_involution(t in any_table(), d in any_pair()) {
        prop_assert_eq!(t.dual().dual(), t.clone());
        prop_assert_eq!(d.dual().dual(), d.clone());
        prop_assert_eq!(d.dual(), common::dual(&d));
    }

    #[test]
    fn dual_preserves_associativity(t in any_table()) {
        prop_assert_eq!(t.dual().is_associative().is_ok(), t.is_associative().is_ok());
        prop_assert_eq!(t.is_associative().is_ok(), common::associative(&t));
    }

    #[test]
    fn duality_swaps_left_and_right_roles(t in any_table()) {
        let (r, rd) = (t.element_roles(), t.dual().element_roles());
        prop_assert_eq!(&r.left_zeros, &rd.right_zeros);
        prop_assert_eq!(&r.right_zeros, &rd.left_zeros);
        prop_assert_eq!(&r.left_identities, &rd.right_identities);
        prop_assert_eq!(&r.right_identities, &rd.left_identities);
    }

    #[test]
    fn predicates_match_brute_force(t in any_table()) {
        prop_assert_eq!(t.is_rectangular(), common::rectangular(&t));
        prop_assert_eq!(t.is_right_commutative(), common::right_commutative(&t));
        prop_assert_eq!(t.is_commutative(), common::commutative(&t));
    }

    #[test]
    fn axiom_report_matches_brute_force(d in any_pair()) {
        let r = d.report();
        prop_assert_eq!(r.assoc_left.is_ok(), common::associative(d.left()));
        prop_assert_eq!(r.assoc_right.is_ok(), common::associative(d.right()));
        let mixed = common::mixed_axioms(d.left(), d.right());
        prop_assert_eq!([r.d1.is_ok(), r.d2.is_ok(), r.d3.is_ok()], mixed);
    }

    #[test]
    fn relabeling_preserves_canonical_form_and_aut_order(
        index in 0usize..10_000,
        seed in proptest::collection::vec(any::<Index>(), 3),
    ) {
        let all: Vec<DiTable> = dimonoid::catalog::enumerate_dimonoids(3).unwrap();
        let d = &all[index % all.len()];
        let p = permutation(3, &seed);
        let e = d.relabel(p.images());
        prop_assert_eq!(canonical_form(&e).unwrap(), canonical_form(d).unwrap());
        prop_assert_eq!(automorphisms(&e).unwrap().order(), automorphisms(d).unwrap().order());
        prop_assert_eq!(e.halo().unwrap().len(), d.halo().unwrap().len());
    }

    #[test]
    fn permutation_group_laws(seed in proptest::collection::vec(any::<Index>(), 6), seed2 in proptest::collection::vec(any::<Index>(), 6)) {
        let (p, q) = (permutation(6, &seed), permutation(6, &seed2));
        prop_assert!(p.compose(&p.inverse()).is_identity());
        prop_assert!(p.inverse().compose(&p).is_identity());
        for x in 0..6 {
            prop_assert_eq!(p.compose(&q).apply(x), p.apply(q.apply(x)));
        }
    }
}

#[test]
fn zero_adjunction_preserves_associativity_and_right_commutativity() {
    for n in 1..=4 {
        for t in enumerate_semigroups(n).unwrap() {
            let z = t.adjoin_zero();
            assert!(common::associative(&z), "{t:?}");
            assert_eq!(
                common::right_commutative(&z),
                common::right_commutative(&t),
                "{t:?}"
            );
            assert_eq!(z.zero(), Some(n));
        }
    }
}

#[test]
fn pruned_automorphism_search_equals_full_scan() {
    for t in semigroups_up_to_3() {
        for d in [
            DiTable::trivial(t.clone()),
            DiTable::pair(t.clone(), t.dual()).unwrap(),
        ] {
            if !d.is_dimonoid() {
                continue;
            }
            let lib: std::collections::BTreeSet<Vec<usize>> = automorphisms(&d)
                .unwrap()
                .perms()
                .iter()
                .map(|p| p.images().to_vec())
                .collect();
            assert_eq!(lib, common::automorphisms(&d), "{d:?}");
        }
    }
    // larger carriers from the families
    for n in 4..=5 {
        for p in dimonoid::families::all_params(n)
            .into_iter()
            .filter(|p| p.n == n)
        {
            let d = DiTable::trivial(p.build().unwrap());
            let lib = automorphisms(&d).unwrap();
            assert_eq!(lib.order(), common::automorphisms(&d).len(), "{p:?}");
            assert!(lib.is_group());
        }
    }
}

#[test]
fn permutations_are_visited_in_order_once() {
    let mut seen = Vec::new();
    for_each_permutation(4, |p| seen.push(p.to_vec()));
    assert_eq!(seen.len(), 24);
    assert!(seen.windows(2).all(|w| w[0] < w[1]));
}
