mod common;

use std::collections::BTreeSet;

use pronormal_core::atlas::{self, GroupSpec};
use pronormal_core::hall::{SubgroupLattice, EXHAUSTIVE_BOUND};
use pronormal_core::{Perm, PermGroup};

use common::brute_closure;

/// Every subgroup generated by at most two elements, as sorted element sets.
fn two_generated_subgroups(g: &PermGroup) -> BTreeSet<Vec<Perm>> {
    let elements = g.elements().unwrap();
    let mut out = BTreeSet::new();
    for (i, x) in elements.iter().enumerate() {
        for y in &elements[i..] {
            let mut s: Vec<Perm> = brute_closure(&[x.clone(), y.clone()], g.degree()).into_iter().collect();
            s.sort();
            out.insert(s);
        }
    }
    out
}

#[test]
fn lattice_counts_match_two_generated_enumeration() {
    // all subgroups of these groups are 2-generated
    for spec in [
        GroupSpec::Symmetric(4),
        GroupSpec::Alternating(5),
        GroupSpec::Dihedral(12),
        GroupSpec::Sl2(3),
        GroupSpec::Symmetric(5),
    ] {
        let g = atlas::build(&spec).unwrap();
        let lattice = SubgroupLattice::compute(&g, None, EXHAUSTIVE_BOUND).unwrap();
        let oracle = two_generated_subgroups(&g);
        assert_eq!(lattice.subgroup_count(), oracle.len(), "{spec}");
        let mut by_order = vec![0usize; g.order() as usize + 1];
        for s in &oracle {
            by_order[s.len()] += 1;
        }
        let mut lattice_by_order = vec![0usize; g.order() as usize + 1];
        for c in lattice.classes() {
            lattice_by_order[c.rep.len()] += c.size;
        }
        assert_eq!(lattice_by_order, by_order, "{spec}");
    }
}

#[test]
fn class_members_are_conjugate_subgroups() {
    let g = atlas::symmetric(4);
    let lattice = SubgroupLattice::compute(&g, None, EXHAUSTIVE_BOUND).unwrap();
    for c in lattice.classes() {
        let members = lattice.members(c);
        assert_eq!(members.len(), c.size);
        let h = lattice.subgroup(c);
        assert_eq!(h.order(), c.rep.len() as u64);
        assert_eq!(g.order() / g.normalizer(&h).unwrap().order(), c.size as u64);
    }
}
