//! Conjugacy classes of subgroups by cyclic extension.
//!
//! Every subgroup is generated by its cyclic subgroups of prime-power
//! order, so joining each class representative with every such cyclic
//! subgroup, starting from the trivial group, reaches every class. With a
//! prime filter π only π-subgroups are built, which keeps the search small
//! when only Hall subgroups and π-subgroups matter.

use std::sync::Arc;

use rustc_hash::FxHashSet;

use crate::elements::{ElemSet, ElementTable};
use crate::error::{GroupError, Result};
use crate::group::PermGroup;
use crate::pi::{factorize, pi_part, prime_set, PiSet};

/// Default largest group order for exhaustive enumeration.
pub const EXHAUSTIVE_BOUND: u64 = 2000;

#[derive(Clone, Debug)]
pub struct SubgroupClass {
    /// Lexicographically least member of the class.
    pub rep: ElemSet,
    /// Element indices generating `rep`.
    pub gens: Vec<u32>,
    /// Number of conjugates.
    pub size: usize,
}

pub struct SubgroupLattice {
    group: PermGroup,
    table: Arc<ElementTable>,
    classes: Vec<SubgroupClass>,
}

impl SubgroupLattice {
    /// All classes of subgroups, or of π-subgroups when `pi` is given.
    pub fn compute(g: &PermGroup, pi: Option<&PiSet>, bound: u64) -> Result<SubgroupLattice> {
        let order = g.order();
        if order > bound {
            return Err(GroupError::TooLarge {
                order,
                limit: bound,
                operation: "exhaustive subgroup enumeration",
            });
        }
        let pi = match pi {
            Some(p) => p.clone(),
            None => prime_set(order)?,
        };
        let limit = pi_part(order, &pi) as usize;
        let table = g.element_table()?;
        table.prepare_mul_table();

        let mut cyclics: Vec<(ElemSet, u32)> = Vec::new();
        let mut seen_cyclic = FxHashSet::default();
        for i in 1..table.len() as u32 {
            let f = factorize(table.element_order(i));
            let parts: Vec<_> = f.iter().collect();
            if parts.len() == 1 && pi.contains(parts[0].0) {
                let c = table.closure(&[i], None).unwrap();
                if seen_cyclic.insert(c.clone()) {
                    cyclics.push((c, i));
                }
            }
        }
        cyclics.sort();

        let trivial = table.closure(&[], None).unwrap();
        let mut known: FxHashSet<ElemSet> = FxHashSet::default();
        known.insert(trivial.clone());
        let mut classes = vec![SubgroupClass {
            rep: trivial,
            gens: Vec::new(),
            size: 1,
        }];
        let mut next = 0;
        while next < classes.len() {
            let base = classes[next].clone();
            next += 1;
            for (c, z) in &cyclics {
                if c.is_subset(&base.rep) {
                    continue;
                }
                let mut gens = base.gens.clone();
                gens.push(*z);
                let Some(j) = table.closure(&gens, Some(limit)) else {
                    continue;
                };
                if !limit.is_multiple_of(j.len()) || known.contains(&j) {
                    continue;
                }
                let orbit = table.conjugacy_orbit_with_generators(&j, &gens);
                let size = orbit.len();
                let (rep, rep_gens) = orbit.iter().min_by(|a, b| a.0.cmp(&b.0)).unwrap().clone();
                known.extend(orbit.into_iter().map(|(s, _)| s));
                classes.push(SubgroupClass {
                    rep,
                    gens: table.reduce_generators(&rep_gens),
                    size,
                });
            }
        }
        classes.sort_by(|a, b| a.rep.len().cmp(&b.rep.len()).then_with(|| a.rep.cmp(&b.rep)));
        Ok(SubgroupLattice {
            group: g.clone(),
            table,
            classes,
        })
    }

    pub fn group(&self) -> &PermGroup {
        &self.group
    }

    pub fn table(&self) -> &Arc<ElementTable> {
        &self.table
    }

    pub fn classes(&self) -> &[SubgroupClass] {
        &self.classes
    }

    /// Total number of subgroups (counting conjugates).
    pub fn subgroup_count(&self) -> usize {
        self.classes.iter().map(|c| c.size).sum()
    }

    /// The class representative as a permutation group.
    pub fn subgroup(&self, class: &SubgroupClass) -> PermGroup {
        let gens = class.gens.iter().map(|&i| self.table.element(i).clone()).collect();
        PermGroup::from_generators(gens, self.group.degree()).unwrap()
    }

    /// Every member of a class with its generators.
    pub fn members(&self, class: &SubgroupClass) -> Vec<(ElemSet, Vec<u32>)> {
        self.table.conjugacy_orbit_with_generators(&class.rep, &class.gens)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::atlas::{alternating, build, symmetric, GroupSpec};

    #[test]
    fn classical_subgroup_counts() {
        // classes / subgroups: Sym_4 11 / 30, Alt_4 5 / 10, Alt_5 9 / 59,
        // Sym_5 19 / 156
        for (g, classes, total) in [
            (symmetric(4), 11, 30),
            (alternating(4), 5, 10),
            (alternating(5), 9, 59),
            (symmetric(5), 19, 156),
        ] {
            let l = SubgroupLattice::compute(&g, None, EXHAUSTIVE_BOUND).unwrap();
            assert_eq!(l.classes().len(), classes);
            assert_eq!(l.subgroup_count(), total);
        }
    }

    #[test]
    fn pi_filter_and_bound() {
        let g = build(&GroupSpec::Psl2(7)).unwrap();
        let l = SubgroupLattice::compute(&g, Some(&"2,3".parse().unwrap()), EXHAUSTIVE_BOUND).unwrap();
        assert!(l.classes().iter().all(|c| 24 % c.rep.len() == 0));
        assert_eq!(l.classes().iter().filter(|c| c.rep.len() == 24).count(), 2);
        assert!(SubgroupLattice::compute(&symmetric(7), None, EXHAUSTIVE_BOUND).is_err());
    }
}
