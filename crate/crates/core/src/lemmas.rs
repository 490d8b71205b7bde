//! The reduction lemmas behind the pronormality arguments, checked as
//! executable properties on generated instances.
//!
//! Each instance satisfies the hypotheses of its statement; the conclusion
//! is decided independently, by orders for the Hall statements and by the
//! definition decider for pronormality.

use std::fmt;
use std::str::FromStr;

use rustc_hash::FxHashMap;

use crate::atlas::{self, DirectProduct, GroupSpec};
use crate::error::{GroupError, Result};
use crate::group::PermGroup;
use crate::hall::{classify_pi_properties, is_pi_separable, sylow, sylow_complexion, SubgroupLattice};
use crate::pi::{pi_part, prime_set, PiSet};
use crate::pronormal::{is_pronormal_definition, is_pronormal_sylow_tower, Verdict};
use crate::quotient::quotient_by_normal;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ReductionLemma {
    /// `H ∈ Hall_π(G)`, `A ⊴ G` give `H∩A ∈ Hall_π(A)` and `HA/A ∈ Hall_π(G/A)`.
    HallIntersection,
    /// A π-separable group satisfies `D_π`.
    SeparableDominance,
    /// Homomorphic images of pronormal subgroups are pronormal.
    HomomorphicImage,
    /// `⟨H_1, H_2⟩` is pronormal in a central product of `G_1, G_2` when each
    /// `H_i` is pronormal in `G_i`.
    CommutingProduct,
    /// `G = HA` with `H` Hall and `A ⊴ G`: `H∩A` pronormal in `A` forces `H`
    /// pronormal in `G`.
    NormalComplementLift,
    /// For `H` Hall and `A ⊴ G` solvable, `H` is pronormal in `G` iff `HA/A`
    /// is pronormal in `G/A`.
    QuotientLift,
    /// Hall subgroups with a Sylow tower are pronormal.
    TowerConjugacy,
}

impl ReductionLemma {
    pub const ALL: [ReductionLemma; 7] = [
        ReductionLemma::HallIntersection,
        ReductionLemma::SeparableDominance,
        ReductionLemma::HomomorphicImage,
        ReductionLemma::CommutingProduct,
        ReductionLemma::NormalComplementLift,
        ReductionLemma::QuotientLift,
        ReductionLemma::TowerConjugacy,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            ReductionLemma::HallIntersection => "hall-intersection",
            ReductionLemma::SeparableDominance => "separable-dominance",
            ReductionLemma::HomomorphicImage => "homomorphic-image",
            ReductionLemma::CommutingProduct => "commuting-product",
            ReductionLemma::NormalComplementLift => "normal-complement-lift",
            ReductionLemma::QuotientLift => "quotient-lift",
            ReductionLemma::TowerConjugacy => "tower-conjugacy",
        }
    }
}

impl fmt::Display for ReductionLemma {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for ReductionLemma {
    type Err = GroupError;

    fn from_str(s: &str) -> Result<ReductionLemma> {
        ReductionLemma::ALL
            .into_iter()
            .find(|l| l.name() == s)
            .ok_or_else(|| GroupError::Unsupported(format!("reduction lemma {s}")))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LemmaInstance {
    pub lemma: ReductionLemma,
    pub group: String,
    pub detail: String,
    pub holds: bool,
}

#[derive(Clone, Debug, Default)]
pub struct LemmaReport {
    pub instances: Vec<LemmaInstance>,
}

impl LemmaReport {
    pub fn count(&self, lemma: ReductionLemma) -> usize {
        self.instances.iter().filter(|i| i.lemma == lemma).count()
    }

    pub fn all_hold(&self) -> bool {
        self.instances.iter().all(|i| i.holds)
    }

    pub fn failures(&self) -> impl Iterator<Item = &LemmaInstance> {
        self.instances.iter().filter(|i| !i.holds)
    }
}

/// Small groups, solvable and not, on which the statements are exercised.
pub fn fixture_groups() -> Vec<(String, PermGroup)> {
    let spec = |s: GroupSpec| (s.to_string(), atlas::build(&s).unwrap());
    let product =
        |name: &str, a: PermGroup, b: PermGroup| (name.to_string(), DirectProduct::new(&[a, b]).unwrap().group);
    vec![
        spec(GroupSpec::Symmetric(3)),
        spec(GroupSpec::Symmetric(4)),
        spec(GroupSpec::Alternating(4)),
        spec(GroupSpec::Dihedral(8)),
        spec(GroupSpec::Dihedral(10)),
        spec(GroupSpec::Dihedral(12)),
        spec(GroupSpec::Dihedral(18)),
        spec(GroupSpec::Dihedral(24)),
        spec(GroupSpec::Cyclic(12)),
        spec(GroupSpec::Sl2(3)),
        spec(GroupSpec::Gl2(3)),
        spec(GroupSpec::SymWrSym(3, 2)),
        spec(GroupSpec::SymWrSym(2, 3)),
        spec(GroupSpec::Symmetric(5)),
        spec(GroupSpec::Alternating(5)),
        spec(GroupSpec::Psl2(7)),
        ("3^2:SD16".to_string(), atlas::affine_semidihedral()),
        product("sym:3 x sym:3", atlas::symmetric(3), atlas::symmetric(3)),
        product("sym:3 x alt:4", atlas::symmetric(3), atlas::alternating(4)),
        product("dih:10 x sym:3", atlas::dihedral(10), atlas::symmetric(3)),
    ]
}

/// Proper nontrivial normal subgroups.
pub fn normal_subgroups(g: &PermGroup) -> Result<Vec<PermGroup>> {
    let lattice = SubgroupLattice::compute(g, None, crate::hall::EXHAUSTIVE_BOUND)?;
    Ok(lattice
        .classes()
        .iter()
        .filter(|c| c.size == 1 && c.rep.len() > 1 && (c.rep.len() as u64) < g.order())
        .map(|c| lattice.subgroup(c))
        .collect())
}

/// Primes sets `π ⊆ π(G)` with a proper nontrivial Hall subgroup question.
fn proper_pi_sets(g: &PermGroup) -> Result<Vec<PiSet>> {
    let all = prime_set(g.order())?;
    Ok(all
        .subsets()
        .into_iter()
        .filter(|p| !p.is_empty() && p.len() < all.len())
        .collect())
}

struct Context {
    verdicts: FxHashMap<(String, String), Verdict>,
}

impl Context {
    fn pronormal(&mut self, g_name: &str, g: &PermGroup, h: &PermGroup) -> Result<bool> {
        let key = (g_name.to_string(), format!("{h:?}"));
        if let Some(v) = self.verdicts.get(&key) {
            return Ok(*v == Verdict::Pronormal);
        }
        let v = is_pronormal_definition(g, h)?.verdict;
        self.verdicts.insert(key, v);
        Ok(v == Verdict::Pronormal)
    }
}

fn describe(h: &PermGroup) -> String {
    format!("order {}", h.order())
}

pub fn verify_reduction_lemmas(selection: &[ReductionLemma]) -> Result<LemmaReport> {
    let mut report = LemmaReport::default();
    let mut ctx = Context {
        verdicts: FxHashMap::default(),
    };
    let wanted = |l: ReductionLemma| selection.contains(&l);
    let mut push = |lemma, group: &str, detail: String, holds| {
        report.instances.push(LemmaInstance {
            lemma,
            group: group.to_string(),
            detail,
            holds,
        })
    };

    for (name, g) in fixture_groups() {
        let normals = normal_subgroups(&g)?;
        for pi in proper_pi_sets(&g)? {
            let c = classify_pi_properties(&g, &pi)?;
            if wanted(ReductionLemma::SeparableDominance) && is_pi_separable(&g, &pi)?.separable {
                push(
                    ReductionLemma::SeparableDominance,
                    &name,
                    format!("pi = {pi}, D_pi = {}", c.satisfies_d),
                    c.satisfies_d,
                );
            }
            for h in c.representatives() {
                if wanted(ReductionLemma::TowerConjugacy) && sylow_complexion(h)?.is_some() {
                    let tower = is_pronormal_sylow_tower(&g, h)?.expect("complexion exists");
                    let holds = tower.verdict == Verdict::Pronormal && ctx.pronormal(&name, &g, h)?;
                    push(
                        ReductionLemma::TowerConjugacy,
                        &name,
                        format!("pi = {pi}, H {}", describe(h)),
                        holds,
                    );
                }
                for a in &normals {
                    let ha = h.join(a);
                    let meet = h.intersection(a)?;
                    if wanted(ReductionLemma::HallIntersection) {
                        let holds = meet.order() == pi_part(a.order(), &pi)
                            && ha.order() / a.order() == pi_part(g.order() / a.order(), &pi);
                        push(
                            ReductionLemma::HallIntersection,
                            &name,
                            format!("pi = {pi}, H {}, A {}", describe(h), describe(a)),
                            holds,
                        );
                    }
                    if wanted(ReductionLemma::NormalComplementLift)
                        && ha.order() == g.order()
                        && ctx.pronormal(&format!("{a:?}"), a, &meet)?
                    {
                        let holds = ctx.pronormal(&name, &g, h)?;
                        push(
                            ReductionLemma::NormalComplementLift,
                            &name,
                            format!("pi = {pi}, H {}, A {}", describe(h), describe(a)),
                            holds,
                        );
                    }
                    if wanted(ReductionLemma::QuotientLift) && a.is_solvable() {
                        let (q, hom) = quotient_by_normal(&g, a)?;
                        let image = hom.image(h)?;
                        let below = ctx.pronormal(&name, &g, h)?;
                        let above = is_pronormal_definition(&q, &image)?.verdict == Verdict::Pronormal;
                        push(
                            ReductionLemma::QuotientLift,
                            &name,
                            format!("pi = {pi}, H {}, A {}: {below} / {above}", describe(h), describe(a)),
                            below == above,
                        );
                    }
                }
            }
        }
        if wanted(ReductionLemma::HomomorphicImage) {
            for p in prime_set(g.order())?.primes() {
                let s = sylow(&g, p)?;
                if !ctx.pronormal(&name, &g, &s)? {
                    continue;
                }
                for a in &normals {
                    let (q, hom) = quotient_by_normal(&g, a)?;
                    let image = hom.image(&s)?;
                    let holds = is_pronormal_definition(&q, &image)?.verdict == Verdict::Pronormal;
                    push(
                        ReductionLemma::HomomorphicImage,
                        &name,
                        format!("Sylow {p}-subgroup modulo {}", describe(a)),
                        holds,
                    );
                }
            }
        }
    }

    if wanted(ReductionLemma::CommutingProduct) {
        let factors: Vec<(String, PermGroup)> = vec![
            ("sym:3".to_string(), atlas::symmetric(3)),
            ("alt:4".to_string(), atlas::alternating(4)),
            ("sym:4".to_string(), atlas::symmetric(4)),
            ("dih:10".to_string(), atlas::dihedral(10)),
        ];
        for (i, (n1, g1)) in factors.iter().enumerate() {
            for (n2, g2) in &factors[i..] {
                let product = DirectProduct::new(&[g1.clone(), g2.clone()])?;
                let name = format!("{n1} x {n2}");
                let pick = |g: &PermGroup| -> Result<Vec<PermGroup>> {
                    let mut v: Vec<PermGroup> = prime_set(g.order())?
                        .primes()
                        .map(|p| sylow(g, p))
                        .collect::<Result<_>>()?;
                    v.push(g.derived_subgroup());
                    Ok(v)
                };
                for h1 in pick(g1)? {
                    for h2 in pick(g2)? {
                        if !ctx.pronormal(n1, g1, &h1)? || !ctx.pronormal(n2, g2, &h2)? {
                            continue;
                        }
                        let h = product.embed_group(0, &h1).join(&product.embed_group(1, &h2));
                        let holds = ctx.pronormal(&name, &product.group, &h)?;
                        push(
                            ReductionLemma::CommutingProduct,
                            &name,
                            format!("H_1 {}, H_2 {}", describe(&h1), describe(&h2)),
                            holds,
                        );
                    }
                }
            }
        }
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn names_round_trip() {
        for l in ReductionLemma::ALL {
            assert_eq!(l.name().parse::<ReductionLemma>().unwrap(), l);
        }
    }

    #[test]
    fn normal_subgroups_of_sym4() {
        let orders: Vec<u64> = normal_subgroups(&atlas::symmetric(4))
            .unwrap()
            .iter()
            .map(PermGroup::order)
            .collect();
        assert_eq!(orders, vec![4, 12]);
    }
}
