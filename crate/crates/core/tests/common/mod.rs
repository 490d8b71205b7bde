#![allow(dead_code)]

use std::collections::{BTreeSet, HashSet, VecDeque};

use pronormal_core::{Perm, PermGroup};

/// All elements of `⟨gens⟩` by breadth-first search over products.
pub fn brute_closure(gens: &[Perm], degree: usize) -> HashSet<Perm> {
    let id = Perm::identity(degree);
    let mut seen = HashSet::from([id.clone()]);
    let mut queue = VecDeque::from([id]);
    while let Some(x) = queue.pop_front() {
        for s in gens {
            let y = &x * s;
            if seen.insert(y.clone()) {
                queue.push_back(y);
            }
        }
    }
    seen
}

pub fn element_set(g: &PermGroup) -> BTreeSet<Perm> {
    brute_closure(g.generators(), g.degree()).into_iter().collect()
}

pub fn group(gens: &[&str], degree: usize) -> PermGroup {
    let gens = gens.iter().map(|s| Perm::parse(s, Some(degree)).unwrap()).collect();
    PermGroup::from_generators(gens, degree).unwrap()
}
