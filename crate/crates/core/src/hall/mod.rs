//! Sylow and Hall subgroups, the `E_π`, `C_π`, `D_π` properties,
//! π-separability and Sylow towers.

mod lattice;
mod seeded;
mod separable;
mod sylow;

use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;

pub use lattice::{SubgroupClass, SubgroupLattice, EXHAUSTIVE_BOUND};
pub use seeded::CANDIDATE_CAP;
pub use separable::{is_pi_separable, pi_core, sylow_complexion, Separability};
pub use sylow::sylow;

use crate::elements::{ElemSet, ElementTable};
use crate::error::{GroupError, Result};
use crate::group::PermGroup;
use crate::perm::gcd;
use crate::pi::{pi_part, prime_set, PiSet};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum SearchMode {
    /// Full enumeration of the π-subgroup classes; exact for every flag.
    Exhaustive,
    /// Fixpoint search from Sylow subgroups; scales past the exhaustive bound.
    Seeded,
}

impl fmt::Display for SearchMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            SearchMode::Exhaustive => "exhaustive",
            SearchMode::Seeded => "seeded",
        })
    }
}

impl FromStr for SearchMode {
    type Err = GroupError;

    fn from_str(s: &str) -> Result<SearchMode> {
        match s {
            "exhaustive" => Ok(SearchMode::Exhaustive),
            "seeded" => Ok(SearchMode::Seeded),
            _ => Err(GroupError::Unsupported(format!("search mode {s}"))),
        }
    }
}

/// How the `D_π` flag was decided.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum DCheck {
    /// Not decided by a search: implied by a trivial case or by `C_π` failing.
    Implied,
    /// Every class of π-subgroups tested; exact.
    Exhaustive,
    /// Only π-subgroups generated by two elements tested; `true` is not a proof.
    TwoGenerated,
    /// Not requested.
    Skipped,
}

impl fmt::Display for DCheck {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            DCheck::Implied => "implied",
            DCheck::Exhaustive => "exhaustive",
            DCheck::TwoGenerated => "two-generated",
            DCheck::Skipped => "skipped",
        })
    }
}

#[derive(Clone, Debug)]
pub struct HallOptions {
    /// `None` picks exhaustive up to `exhaustive_bound` and seeded above.
    pub mode: Option<SearchMode>,
    pub exhaustive_bound: u64,
    pub candidate_cap: usize,
    pub check_d: bool,
}

impl Default for HallOptions {
    fn default() -> HallOptions {
        HallOptions {
            mode: None,
            exhaustive_bound: EXHAUSTIVE_BOUND,
            candidate_cap: CANDIDATE_CAP,
            check_d: true,
        }
    }
}

impl HallOptions {
    pub fn with_mode(mode: SearchMode) -> HallOptions {
        HallOptions {
            mode: Some(mode),
            ..HallOptions::default()
        }
    }
}

/// One conjugacy class of Hall subgroups.
#[derive(Clone, Debug)]
pub struct HallClass {
    pub group: PermGroup,
    pub class_size: u64,
}

#[derive(Clone, Debug)]
pub struct HallClassification {
    pub pi: PiSet,
    pub ambient: PermGroup,
    pub classes: Vec<HallClass>,
    pub satisfies_e: bool,
    pub satisfies_c: bool,
    pub satisfies_d: bool,
    pub d_check: DCheck,
    pub search_mode: SearchMode,
    /// True iff the search provably found every class.
    pub complete: bool,
}

impl HallClassification {
    pub fn hall_order(&self) -> u64 {
        pi_part(self.ambient.order(), &self.pi)
    }

    pub fn representatives(&self) -> impl Iterator<Item = &PermGroup> {
        self.classes.iter().map(|c| &c.group)
    }
}

/// `H` is a π-Hall subgroup of `G`.
pub fn is_hall_subgroup(g: &PermGroup, h: &PermGroup, pi: &PiSet) -> bool {
    h.is_subgroup_of(g) && pi.is_pi_number(h.order()) && h.order() == pi_part(g.order(), pi)
}

/// `H` is a Hall subgroup of `G` for some π: `gcd(|H|, |G:H|) = 1`.
pub fn is_hall(g: &PermGroup, h: &PermGroup) -> bool {
    h.is_subgroup_of(g) && gcd(h.order(), g.order() / h.order()) == 1
}

/// Conjugacy classes of π-Hall subgroups; the `D_π` flag is left
/// [`DCheck::Skipped`] unless the trivial cases decide it.
pub fn hall_subgroups(g: &PermGroup, pi: &PiSet, mode: SearchMode) -> Result<HallClassification> {
    classify(
        g,
        pi,
        &HallOptions {
            check_d: false,
            ..HallOptions::with_mode(mode)
        },
    )
}

/// Hall classes with every flag decided.
pub fn classify_pi_properties(g: &PermGroup, pi: &PiSet) -> Result<HallClassification> {
    classify(g, pi, &HallOptions::default())
}

pub fn classify(g: &PermGroup, pi: &PiSet, options: &HallOptions) -> Result<HallClassification> {
    let order = g.order();
    let mode = options.mode.unwrap_or(if order <= options.exhaustive_bound {
        SearchMode::Exhaustive
    } else {
        SearchMode::Seeded
    });
    if mode == SearchMode::Exhaustive && order > options.exhaustive_bound {
        return Err(GroupError::TooLarge {
            order,
            limit: options.exhaustive_bound,
            operation: "exhaustive Hall search",
        });
    }
    let target = pi_part(order, pi);
    let trivial_case = |h: PermGroup| HallClassification {
        pi: pi.clone(),
        ambient: g.clone(),
        classes: vec![HallClass {
            group: h,
            class_size: 1,
        }],
        satisfies_e: true,
        satisfies_c: true,
        satisfies_d: true,
        d_check: DCheck::Implied,
        search_mode: mode,
        complete: true,
    };
    if target == order {
        return Ok(trivial_case(g.clone()));
    }
    if target == 1 {
        return Ok(trivial_case(PermGroup::from_generators(Vec::new(), g.degree())?));
    }

    let (table, classes, complete, d) = match mode {
        SearchMode::Exhaustive => {
            let lattice = SubgroupLattice::compute(g, Some(pi), options.exhaustive_bound)?;
            let halls: Vec<(Vec<u32>, Vec<ElemSet>)> = lattice
                .classes()
                .iter()
                .filter(|c| c.rep.len() as u64 == target)
                .map(|c| {
                    let members = lattice.members(c).into_iter().map(|(s, _)| s).collect();
                    (c.gens.clone(), members)
                })
                .collect();
            let table = lattice.table().clone();
            let d = if options.check_d && halls.len() == 1 {
                let covered = lattice
                    .classes()
                    .iter()
                    .all(|c| halls[0].1.iter().any(|m| c.gens.iter().all(|&x| m.contains(x))));
                Some(covered)
            } else {
                None
            };
            (table, halls, true, d)
        }
        SearchMode::Seeded => {
            let result = seeded::seeded_search(g, pi, options.candidate_cap)?;
            let halls: Vec<(Vec<u32>, Vec<ElemSet>)> = result.halls.into_iter().map(|c| (c.gens, c.orbit)).collect();
            let d = (options.check_d && halls.len() == 1)
                .then(|| two_generated_covered(&result.table, pi, target, &halls[0].1));
            (result.table, halls, result.complete, d)
        }
    };
    let mut reps: Vec<(ElemSet, HallClass)> = classes
        .into_iter()
        .map(|(gens, members)| {
            let least = members.iter().min().unwrap().clone();
            let group =
                PermGroup::from_generators(gens.iter().map(|&i| table.element(i).clone()).collect(), g.degree())
                    .unwrap();
            let class = HallClass {
                group,
                class_size: members.len() as u64,
            };
            (least, class)
        })
        .collect();
    reps.sort_by(|a, b| a.0.cmp(&b.0));
    let classes: Vec<HallClass> = reps.into_iter().map(|(_, c)| c).collect();
    let satisfies_e = !classes.is_empty();
    let satisfies_c = classes.len() == 1;
    let (satisfies_d, d_check) = match d {
        Some(covered) => (
            covered,
            if mode == SearchMode::Exhaustive {
                DCheck::Exhaustive
            } else {
                DCheck::TwoGenerated
            },
        ),
        None if !satisfies_c => (false, DCheck::Implied),
        None => (false, DCheck::Skipped),
    };
    Ok(HallClassification {
        pi: pi.clone(),
        ambient: g.clone(),
        classes,
        satisfies_e,
        satisfies_c,
        satisfies_d,
        d_check,
        search_mode: mode,
        complete,
    })
}

/// Is every π-subgroup `⟨x, y⟩` inside one of the Hall subgroups `members`?
/// `x` runs over class representatives of π-elements and `y` over all
/// π-elements.
fn two_generated_covered(table: &ElementTable, pi: &PiSet, target: u64, members: &[ElemSet]) -> bool {
    let pi_elements: Vec<u32> = (1..table.len() as u32)
        .filter(|&i| pi.is_pi_number(table.element_order(i)))
        .collect();
    let reps: Vec<u32> = table
        .conjugacy_classes()
        .into_iter()
        .map(|c| c[0])
        .filter(|&i| i != 0 && pi.is_pi_number(table.element_order(i)))
        .collect();
    reps.par_iter().all(|&x| {
        let holders: Vec<&ElemSet> = members.iter().filter(|m| m.contains(x)).collect();
        pi_elements.iter().all(|&y| {
            holders.iter().any(|m| m.contains(y))
                || table
                    .closure(&[x, y], Some(target as usize))
                    .is_none_or(|k| !(target as usize).is_multiple_of(k.len()))
        })
    })
}

/// Checks every representative against the definition of a π-Hall subgroup.
pub fn check_classification(c: &HallClassification) -> Result<()> {
    let order = c.ambient.order();
    for h in c.representatives() {
        let ho = h.order();
        if !h.is_subgroup_of(&c.ambient) || !c.pi.is_pi_number(ho) || gcd(ho, order / ho) != 1 {
            return Err(GroupError::NotHall);
        }
        if prime_set(order / ho)?.primes().any(|p| c.pi.contains(p)) {
            return Err(GroupError::NotHall);
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::atlas::{alternating, build, symmetric, GroupSpec};

    fn pi(s: &str) -> PiSet {
        s.parse().unwrap()
    }

    #[test]
    fn improper_and_trivial() {
        let c = classify_pi_properties(&symmetric(4), &pi("2,3")).unwrap();
        assert!(c.satisfies_e && c.satisfies_c && c.satisfies_d);
        assert_eq!(c.classes[0].group.order(), 24);
        let c = classify_pi_properties(&symmetric(4), &pi("5")).unwrap();
        assert_eq!(c.classes[0].group.order(), 1);
    }

    #[test]
    fn psl2_7_has_two_classes() {
        let g = build(&GroupSpec::Psl2(7)).unwrap();
        let c = classify_pi_properties(&g, &pi("2,3")).unwrap();
        assert!(c.satisfies_e);
        assert!(!c.satisfies_c);
        assert_eq!(c.classes.len(), 2);
        assert!(c.representatives().all(|h| h.order() == 24));
        check_classification(&c).unwrap();
    }

    #[test]
    fn alt5_two_five() {
        let c = classify_pi_properties(&alternating(5), &pi("2,5")).unwrap();
        assert!(!c.satisfies_e);
        let c = classify_pi_properties(&alternating(5), &pi("2,3")).unwrap();
        assert!(c.satisfies_c);
        assert!(!c.satisfies_d);
        assert_eq!(c.d_check, DCheck::Exhaustive);
    }

    #[test]
    fn seeded_matches_exhaustive_on_sym5() {
        for p in ["2,3", "2,5", "3,5", "2", "5"] {
            let e = classify(&symmetric(5), &pi(p), &HallOptions::with_mode(SearchMode::Exhaustive)).unwrap();
            let s = classify(&symmetric(5), &pi(p), &HallOptions::with_mode(SearchMode::Seeded)).unwrap();
            assert_eq!(e.classes.len(), s.classes.len(), "{p}");
            assert!(s.complete);
            assert_eq!(e.satisfies_d, s.satisfies_d, "{p}");
        }
    }

    #[test]
    fn sym7_hall_two_three() {
        let c = classify(&symmetric(7), &pi("2,3"), &HallOptions::default()).unwrap();
        assert_eq!(c.search_mode, SearchMode::Seeded);
        assert!(c.complete);
        assert_eq!(c.classes.len(), 1);
        assert_eq!(c.classes[0].group.order(), 144);
        assert_eq!(c.classes[0].class_size, 35);
    }
}
