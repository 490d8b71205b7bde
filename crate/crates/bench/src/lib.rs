//! Inputs shared by the criterion benchmarks in `benches/`.

use pronormal_core::atlas::{self, GroupSpec};
use pronormal_core::{hall_subgroups, PermGroup, SearchMode};

/// M11 on 11 points with a fresh, unbuilt stabilizer chain.
pub fn m11_generators() -> PermGroup {
    let g = atlas::m11();
    PermGroup::from_generators(g.generators().to_vec(), g.degree()).unwrap()
}

pub fn group(spec: GroupSpec) -> PermGroup {
    atlas::build(&spec).unwrap()
}

/// A Hall subgroup of `spec` for the given prime set.
pub fn hall(spec: GroupSpec, pi: &str) -> (PermGroup, PermGroup) {
    let g = group(spec);
    let h = hall_subgroups(&g, &pi.parse().unwrap(), SearchMode::Seeded)
        .unwrap()
        .classes
        .remove(0)
        .group;
    (g, h)
}
