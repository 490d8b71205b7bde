//! Hall subgroup search for groups too large for the full lattice.
//!
//! A Hall π-subgroup `H` is generated by Sylow subgroups of `G`, one per
//! prime of π, since its Sylow subgroups are Sylow in `G`. So every Hall
//! subgroup is reached from a Sylow `p₀`-subgroup by repeatedly joining
//! with conjugates of the Sylow subgroups, where every intermediate join
//! has order dividing `|G|_π`. The search keeps one representative per
//! conjugacy class of such joins and stops at a fixpoint; reaching the
//! fixpoint without hitting the candidate cap proves completeness.

use std::sync::Arc;

use rayon::prelude::*;
use rustc_hash::FxHashSet;

use crate::elements::{ElemSet, ElementTable};
use crate::error::Result;
use crate::group::PermGroup;
use crate::pi::{pi_part, PiSet};

use super::sylow::sylow;

/// Default cap on the number of candidate classes.
pub const CANDIDATE_CAP: usize = 20_000;

pub(crate) struct Candidate {
    pub set: ElemSet,
    pub gens: Vec<u32>,
    pub orbit: Vec<ElemSet>,
}

pub(crate) struct SeededResult {
    pub table: Arc<ElementTable>,
    /// Classes of Hall subgroups, with every member.
    pub halls: Vec<Candidate>,
    pub complete: bool,
}

fn indices(table: &ElementTable, g: &PermGroup) -> Vec<u32> {
    g.generators()
        .iter()
        .map(|x| table.index_of(x).expect("subgroup element"))
        .collect()
}

pub(crate) fn seeded_search(g: &PermGroup, pi: &PiSet, cap: usize) -> Result<SeededResult> {
    let table = g.element_table()?;
    table.prepare_mul_table();
    let target = pi_part(g.order(), pi) as usize;
    let primes: Vec<u64> = pi.primes().filter(|&p| g.order().is_multiple_of(p)).collect();

    // conjugates of each Sylow subgroup, with generators
    let mut sylow_conjugates: Vec<Vec<u32>> = Vec::new();
    let mut sylows: Vec<(u64, Vec<u32>)> = Vec::new();
    let mut normalizers: Vec<Vec<u32>> = Vec::new();
    for &p in &primes {
        let s = sylow(g, p)?;
        let gens = indices(&table, &s);
        let set = table.closure(&gens, None).unwrap();
        sylow_conjugates.extend(
            table
                .conjugacy_orbit_with_generators(&set, &gens)
                .into_iter()
                .map(|(_, gens)| gens),
        );
        let n = g.normalizer(&s)?;
        if (target as u64).is_multiple_of(n.order()) && n.order() > s.order() {
            normalizers.push(indices(&table, &n));
        }
        sylows.push((s.order(), gens));
    }
    // the largest Sylow subgroup first keeps the candidate count low
    sylows.sort_by_key(|s| std::cmp::Reverse(s.0));

    let mut known: FxHashSet<ElemSet> = FxHashSet::default();
    let mut candidates: Vec<Candidate> = Vec::new();
    let add = |set: ElemSet, gens: Vec<u32>, known: &mut FxHashSet<ElemSet>, candidates: &mut Vec<Candidate>| {
        if !target.is_multiple_of(set.len()) || known.contains(&set) {
            return;
        }
        let orbit = table.conjugacy_orbit(&set);
        known.extend(orbit.iter().cloned());
        candidates.push(Candidate {
            set,
            gens: table.reduce_generators(&gens),
            orbit,
        });
    };
    let seeds = sylows.into_iter().map(|(_, gens)| gens).chain(normalizers);
    for gens in std::iter::once(Vec::new()).chain(seeds) {
        if let Some(set) = table.closure(&gens, Some(target)) {
            add(set, gens, &mut known, &mut candidates);
        }
    }
    // the trivial seed only matters when no prime of π divides |G|
    if !primes.is_empty() {
        candidates.remove(0);
    }

    let mut next = 0;
    let mut complete = true;
    while next < candidates.len() {
        if candidates.len() > cap {
            complete = false;
            break;
        }
        let base_set = candidates[next].set.clone();
        let base_gens = candidates[next].gens.clone();
        next += 1;
        if base_set.len() == target {
            continue;
        }
        let joins: Vec<(ElemSet, Vec<u32>)> = sylow_conjugates
            .par_iter()
            .filter(|q| !q.iter().all(|&x| base_set.contains(x)))
            .filter_map(|q| {
                let mut gens = base_gens.clone();
                gens.extend_from_slice(q);
                let set = table.closure(&gens, Some(target))?;
                target.is_multiple_of(set.len()).then_some((set, gens))
            })
            .collect();
        for (set, gens) in joins {
            add(set, gens, &mut known, &mut candidates);
        }
    }
    let halls = candidates.into_iter().filter(|c| c.set.len() == target).collect();
    Ok(SeededResult { table, halls, complete })
}
