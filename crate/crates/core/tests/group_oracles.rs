mod common;

use std::collections::BTreeSet;

use pronormal_core::atlas::{self, catalog, GroupSpec};
use pronormal_core::{Perm, PermGroup};
use proptest::prelude::*;

use common::{brute_closure, element_set};

fn perm_strategy(degree: usize) -> impl Strategy<Value = Perm> {
    Just((0..degree).collect::<Vec<_>>())
        .prop_shuffle()
        .prop_map(|v| Perm::from_images(&v).unwrap())
}

fn gens_strategy() -> impl Strategy<Value = (usize, Vec<Perm>)> {
    (2usize..=7).prop_flat_map(|d| (Just(d), prop::collection::vec(perm_strategy(d), 1..=3)))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn order_matches_closure((degree, gens) in gens_strategy()) {
        let g = PermGroup::from_generators(gens.clone(), degree).unwrap();
        let all = brute_closure(&gens, degree);
        prop_assert_eq!(g.order(), all.len() as u64);
        for x in all.iter().take(50) {
            prop_assert!(g.contains(x));
        }
    }

    #[test]
    fn subgroup_orders_divide((degree, gens) in gens_strategy(), k in 1usize..3) {
        let g = PermGroup::from_generators(gens.clone(), degree).unwrap();
        let h = PermGroup::from_generators(gens[..k.min(gens.len())].to_vec(), degree).unwrap();
        prop_assert!(h.is_subgroup_of(&g));
        prop_assert_eq!(g.order() % h.order(), 0);
        let n = g.normalizer(&h).unwrap();
        prop_assert_eq!(n.order() % h.order(), 0);
        prop_assert_eq!(g.order() % n.order(), 0);
    }

    #[test]
    fn normalizer_matches_scan((degree, gens) in gens_strategy(), k in 1usize..3) {
        let g = PermGroup::from_generators(gens.clone(), degree).unwrap();
        prop_assume!(g.order() <= 720);
        let h = PermGroup::from_generators(gens[..k.min(gens.len())].to_vec(), degree).unwrap();
        let hs = element_set(&h);
        let count = brute_closure(&gens, degree)
            .iter()
            .filter(|x| hs.iter().all(|y| hs.contains(&y.conjugate_by(x))))
            .count();
        prop_assert_eq!(g.normalizer(&h).unwrap().order(), count as u64);
    }

    #[test]
    fn intersection_matches_sets(
        gens in prop::collection::vec(perm_strategy(6), 1..=2),
        other in prop::collection::vec(perm_strategy(6), 1..=2),
    ) {
        let a = PermGroup::from_generators(gens, 6).unwrap();
        let b = PermGroup::from_generators(other, 6).unwrap();
        let common: BTreeSet<Perm> = element_set(&a).intersection(&element_set(&b)).cloned().collect();
        prop_assert_eq!(a.intersection(&b).unwrap().order(), common.len() as u64);
    }
}

#[test]
fn catalog_orders_match_closure() {
    for spec in catalog() {
        if spec.classical_order() > 3000 {
            continue;
        }
        let g = atlas::build(&spec).unwrap();
        assert_eq!(
            brute_closure(g.generators(), g.degree()).len() as u64,
            g.order(),
            "{spec}"
        );
    }
}

#[test]
fn projective_line_action() {
    let g = atlas::build(&GroupSpec::Psl2(7)).unwrap();
    assert_eq!((g.degree(), g.order()), (8, 168));
    let m = atlas::build(&GroupSpec::M11).unwrap();
    assert_eq!((m.degree(), m.order()), (11, 7920));
}

#[test]
fn seed_does_not_change_order() {
    let g = atlas::m11();
    for seed in [1, 7, 99] {
        assert_eq!(g.with_seed(seed).order(), 7920);
    }
}
