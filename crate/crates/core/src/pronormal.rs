//! Pronormality deciders.
//!
//! `H` is pronormal in `G` when `H` and `H^g` are conjugate in `⟨H, H^g⟩`
//! for every `g ∈ G`. Since `H^g` only depends on the coset `N_G(H) g`,
//! the definition decider tests one `g` per right coset of `N_G(H)`. When
//! `H` contains a pronormal subgroup `S` of `G` (a Sylow subgroup, say),
//! it is enough to test `g ∈ N_G(S)`, one per right coset of `N_H(S)`.
//! For a Hall subgroup with a Sylow tower every test must succeed, and the
//! tower decider still produces the witnesses.

use std::fmt;

use rayon::prelude::*;

use crate::error::{GroupError, Result};
use crate::group::PermGroup;
use crate::hall::{is_hall, sylow, sylow_complexion};
use crate::perm::Perm;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Verdict {
    Pronormal,
    NotPronormal,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Pronormal => "pronormal",
            Verdict::NotPronormal => "not_pronormal",
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Method {
    Definition,
    Reduced,
    SylowTower,
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Method::Definition => "definition",
            Method::Reduced => "reduced",
            Method::SylowTower => "sylow_tower",
        })
    }
}

/// One conjugacy test: `H` against `H^g` inside their join.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConjugacyTest {
    pub g: Perm,
    pub join_order: u64,
    /// `x ∈ ⟨H, H^g⟩` with `H^x = H^g`, if one exists.
    pub witness: Option<Perm>,
}

#[derive(Clone, Debug)]
pub struct PronormalityCertificate {
    pub ambient: PermGroup,
    pub subject: PermGroup,
    pub verdict: Verdict,
    pub method: Method,
    /// For the reduced method, the pronormal subgroup `S ≤ H` used.
    pub anchor: Option<PermGroup>,
    /// For the tower method, the complexion of the subject.
    pub complexion: Option<Vec<u64>>,
    pub tests: Vec<ConjugacyTest>,
    /// First tested `g` without a witness.
    pub counterexample: Option<Perm>,
}

fn require(g: &PermGroup, h: &PermGroup, what: &'static str) -> Result<()> {
    if h.is_subgroup_of(g) {
        Ok(())
    } else {
        Err(GroupError::NotContained { what })
    }
}

/// Does `m` map every orbit of `h` onto an orbit of `k`?
fn maps_orbits(m: &Perm, h_orbits: &[Vec<usize>], k_label: &[usize]) -> bool {
    h_orbits.iter().all(|o| {
        let l = k_label[m.image(o[0])];
        o.iter().all(|&x| k_label[m.image(x)] == l)
    })
}

fn orbit_label(orbits: &[Vec<usize>], degree: usize) -> Vec<usize> {
    let mut label = vec![0; degree];
    for (i, o) in orbits.iter().enumerate() {
        for &x in o {
            label[x] = i;
        }
    }
    label
}

fn orbit_shape(orbits: &[Vec<usize>]) -> Vec<usize> {
    let mut v: Vec<usize> = orbits.iter().map(Vec::len).collect();
    v.sort_unstable();
    v
}

/// An element `m ∈ M` with `H^m = K`, or `None` if there is none.
///
/// The scan runs over all of `M`; elements of one right coset of `N_M(H)`
/// give the same conjugate, so this is an exhaustive search of a right
/// transversal, with the first element of `M` found in each coset.
pub fn are_conjugate_in(m: &PermGroup, h: &PermGroup, k: &PermGroup) -> Result<Option<Perm>> {
    require(m, h, "first subgroup")?;
    require(m, k, "second subgroup")?;
    if h.order() != k.order() {
        return Ok(None);
    }
    if h.same_subgroup(k) {
        return Ok(Some(m.identity()));
    }
    let h_orbits = h.orbits();
    let k_orbits = k.orbits();
    if orbit_shape(&h_orbits) != orbit_shape(&k_orbits) {
        return Ok(None);
    }
    let k_label = orbit_label(&k_orbits, k.degree());
    let table = m.element_table()?;
    Ok(table
        .elements()
        .iter()
        .find(|x| maps_orbits(x, &h_orbits, &k_label) && h.generators().iter().all(|y| k.contains(&y.conjugate_by(x))))
        .cloned())
}

/// One definition test for `g`.
fn conjugacy_test(h: &PermGroup, g: &Perm) -> Result<ConjugacyTest> {
    let k = h.conjugate(g);
    let join = h.join(&k);
    let witness = if join.contains(g) {
        Some(g.clone())
    } else {
        are_conjugate_in(&join, h, &k)?
    };
    Ok(ConjugacyTest {
        g: g.clone(),
        join_order: join.order(),
        witness,
    })
}

fn run_tests(h: &PermGroup, gs: &[Perm]) -> Result<(Vec<ConjugacyTest>, Option<Perm>)> {
    let tests: Vec<ConjugacyTest> = gs.par_iter().map(|g| conjugacy_test(h, g)).collect::<Result<_>>()?;
    let counterexample = tests.iter().find(|t| t.witness.is_none()).map(|t| t.g.clone());
    Ok((tests, counterexample))
}

fn certificate(
    g: &PermGroup,
    h: &PermGroup,
    method: Method,
    tests: Vec<ConjugacyTest>,
    counterexample: Option<Perm>,
) -> PronormalityCertificate {
    PronormalityCertificate {
        ambient: g.clone(),
        subject: h.clone(),
        verdict: if counterexample.is_none() {
            Verdict::Pronormal
        } else {
            Verdict::NotPronormal
        },
        method,
        anchor: None,
        complexion: None,
        tests,
        counterexample,
    }
}

/// Tests every `g` in a right transversal of `N_G(H)` in `G`, so exactly
/// `|G : N_G(H)|` tests.
pub fn is_pronormal_definition(g: &PermGroup, h: &PermGroup) -> Result<PronormalityCertificate> {
    require(g, h, "subject")?;
    let n = g.normalizer(h)?;
    let transversal = g.right_transversal(&n)?;
    let (tests, counterexample) = run_tests(h, &transversal)?;
    Ok(certificate(g, h, Method::Definition, tests, counterexample))
}

/// Tests every `g` in a right transversal of `N_H(S)` in `N_G(S)`. The
/// caller guarantees that `S` is pronormal in `G`; every Sylow subgroup
/// of `G` is.
pub fn is_pronormal_reduced(g: &PermGroup, h: &PermGroup, s: &PermGroup) -> Result<PronormalityCertificate> {
    require(g, h, "subject")?;
    require(h, s, "anchor")?;
    let ng = g.normalizer(s)?;
    let nh = ng.intersection(h)?;
    let transversal = ng.right_transversal(&nh)?;
    let (tests, counterexample) = run_tests(h, &transversal)?;
    let mut cert = certificate(g, h, Method::Reduced, tests, counterexample);
    cert.anchor = Some(s.clone());
    Ok(cert)
}

/// A Sylow subgroup of `G` inside `H`, preferring the prime 2.
pub fn sylow_anchor(g: &PermGroup, h: &PermGroup) -> Result<PermGroup> {
    let (go, ho) = (g.order(), h.order());
    let mut primes: Vec<u64> = crate::pi::prime_set(ho)?.primes().collect();
    primes.sort_by_key(|&p| (p != 2, p));
    for p in primes {
        let full = crate::pi::PiSet::new([p])?;
        if crate::pi::pi_part(ho, &full) == crate::pi::pi_part(go, &full) {
            return sylow(h, p);
        }
    }
    Err(GroupError::Unsupported(
        "subgroup contains no Sylow subgroup of the ambient group".to_string(),
    ))
}

/// For a Hall subgroup with a Sylow tower, the certificate with every
/// witness; `None` when `H` has no tower.
pub fn is_pronormal_sylow_tower(g: &PermGroup, h: &PermGroup) -> Result<Option<PronormalityCertificate>> {
    require(g, h, "subject")?;
    if !is_hall(g, h) {
        return Err(GroupError::NotHall);
    }
    let Some(complexion) = sylow_complexion(h)? else {
        return Ok(None);
    };
    let n = g.normalizer(h)?;
    let transversal = g.right_transversal(&n)?;
    let (tests, counterexample) = run_tests(h, &transversal)?;
    let mut cert = certificate(g, h, Method::SylowTower, tests, counterexample);
    cert.complexion = Some(complexion);
    Ok(Some(cert))
}

/// Re-checks a certificate from its embedded data: every witness lies in
/// the join and conjugates `H` to `H^g`, and a counterexample really has
/// no conjugating element in its join.
pub fn verify_certificate(cert: &PronormalityCertificate) -> Result<bool> {
    let h = &cert.subject;
    for t in &cert.tests {
        if !cert.ambient.contains(&t.g) {
            return Ok(false);
        }
        let k = h.conjugate(&t.g);
        let join = h.join(&k);
        if join.order() != t.join_order {
            return Ok(false);
        }
        match &t.witness {
            Some(x) => {
                if !join.contains(x) || !h.conjugate(x).same_subgroup(&k) {
                    return Ok(false);
                }
            }
            None => {
                if are_conjugate_in(&join, h, &k)?.is_some() {
                    return Ok(false);
                }
            }
        }
    }
    let failing = cert.tests.iter().find(|t| t.witness.is_none()).map(|t| &t.g);
    let consistent = match cert.verdict {
        Verdict::Pronormal => failing.is_none() && cert.counterexample.is_none(),
        Verdict::NotPronormal => failing.is_some() && failing == cert.counterexample.as_ref(),
    };
    Ok(consistent)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::atlas::{alternating, klein, symmetric};

    fn p(s: &str, n: usize) -> Perm {
        Perm::parse(s, Some(n)).unwrap()
    }

    fn grp(gens: &[&str], n: usize) -> PermGroup {
        PermGroup::from_generators(gens.iter().map(|s| p(s, n)).collect(), n).unwrap()
    }

    #[test]
    fn involution_in_alt4_is_not_pronormal() {
        let g = alternating(4);
        let h = grp(&["(0 1)(2 3)"], 4);
        let cert = is_pronormal_definition(&g, &h).unwrap();
        assert_eq!(cert.verdict, Verdict::NotPronormal);
        assert_eq!(cert.tests.len(), 3);
        let bad = cert.counterexample.clone().unwrap();
        let k = h.conjugate(&bad);
        assert_eq!(h.join(&k).order(), 4);
        assert!(verify_certificate(&cert).unwrap());
    }

    #[test]
    fn conjugacy_in_klein_group() {
        let v = PermGroup::from_generators(klein().generators().to_vec(), 4).unwrap();
        let h = grp(&["(0 1)(2 3)"], 4);
        let k = grp(&["(0 2)(1 3)"], 4);
        assert_eq!(are_conjugate_in(&v, &h, &k).unwrap(), None);
        assert_eq!(are_conjugate_in(&v, &h, &h).unwrap(), Some(Perm::identity(4)));
        let c = grp(&["(0 1 2)"], 4);
        assert_eq!(are_conjugate_in(&alternating(4), &h, &c).unwrap(), None);
    }

    #[test]
    fn normal_and_sylow_subgroups_are_pronormal() {
        let g = symmetric(4);
        let a4 = alternating(4);
        let cert = is_pronormal_definition(&g, &a4).unwrap();
        assert_eq!(cert.verdict, Verdict::Pronormal);
        assert_eq!(cert.tests.len(), 1);
        let s = sylow(&g, 2).unwrap();
        let cert = is_pronormal_definition(&g, &s).unwrap();
        assert_eq!(cert.verdict, Verdict::Pronormal);
        assert_eq!(cert.tests.len(), 3);
        assert!(verify_certificate(&cert).unwrap());
    }

    #[test]
    fn reduced_agrees_with_definition() {
        let g = symmetric(5);
        let h = grp(&["(0 1)", "(0 1 2 3)"], 5);
        let s = sylow_anchor(&g, &h).unwrap();
        let red = is_pronormal_reduced(&g, &h, &s).unwrap();
        let def = is_pronormal_definition(&g, &h).unwrap();
        assert_eq!(red.verdict, def.verdict);
        assert_eq!(red.verdict, Verdict::Pronormal);
        assert!(verify_certificate(&red).unwrap());
    }

    #[test]
    fn tower_decider() {
        let a5 = alternating(5);
        let a4 = grp(&["(0 1 2)", "(0 1)(2 3)"], 5);
        let cert = is_pronormal_sylow_tower(&a5, &a4).unwrap().unwrap();
        assert_eq!(cert.verdict, Verdict::Pronormal);
        assert_eq!(cert.complexion, Some(vec![3, 2]));
        // Sym_4 is a Hall subgroup of Sym_5 without a Sylow tower
        let s4 = grp(&["(0 1)", "(0 1 2 3)"], 5);
        assert!(is_pronormal_sylow_tower(&symmetric(5), &s4).unwrap().is_none());
        let involution = grp(&["(0 1)(2 3)"], 5);
        assert!(matches!(
            is_pronormal_sylow_tower(&a5, &involution),
            Err(GroupError::NotHall)
        ));
    }
}
