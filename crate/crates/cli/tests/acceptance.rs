//! Acceptance criteria, one line each, with pinned wall-clock budgets.
//! Literal values below are the published ones; everything else is
//! recomputed here from the engine primitives.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use clap::Parser;
use pronormal_cli::report::{Results, SuiteReport};
use pronormal_cli::{run, Cli, Status};
use pronormal_core::atlas::{self, catalog, GroupSpec};
use pronormal_core::hall::{sylow, SubgroupLattice, EXHAUSTIVE_BOUND};
use pronormal_core::pi::prime_set;
use pronormal_core::{
    hall_subgroups, is_pronormal_definition, verify_certificate, Fingerprint, Perm, PermGroup, PiSet, SearchMode,
    Verdict,
};

type Check = std::result::Result<String, String>;

/// Name, budget in seconds and the check itself.
type Criterion = (&'static str, u64, fn() -> Check);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> std::result::Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn pi(s: &str) -> PiSet {
    s.parse().unwrap()
}

fn build(spec: GroupSpec) -> PermGroup {
    atlas::build(&spec).unwrap()
}

fn suite(name: &str) -> std::result::Result<SuiteReport, String> {
    let cli = Cli::parse_from(["pronormal", "verify", name]);
    let (report, status) = run(&cli).map_err(|(e, _)| e.to_string())?;
    let Results::Verify(s) = report.results else {
        return Err("verify produced no suite report".into());
    };
    if status != Status::Ok || s.failed_count > 0 || s.skipped_count > 0 {
        let bad: Vec<&str> = s.items.iter().filter(|i| !i.passed).map(|i| i.name.as_str()).collect();
        return Err(format!("verify {name} failed: {}", bad.join(", ")));
    }
    Ok(s)
}

/// Unique Hall class with the given order, index and maximality.
fn unique_maximal_hall(
    spec: GroupSpec,
    p: &str,
    order: u64,
    index: u64,
    mode: SearchMode,
) -> std::result::Result<(), String> {
    let g = build(spec);
    let c = hall_subgroups(&g, &pi(p), mode).map_err(|e| e.to_string())?;
    ensure(c.complete && c.classes.len() == 1, || {
        format!("{spec}: {} classes", c.classes.len())
    })?;
    let h = &c.classes[0].group;
    ensure(h.order() == order && g.order() / h.order() == index, || {
        format!("{spec}: order {}", h.order())
    })?;
    // the class size is the number of conjugates, counted independently
    let conjugates = g.order() / g.normalizer(h).unwrap().order();
    ensure(c.classes[0].class_size == conjugates, || {
        format!("{spec}: class size mismatch")
    })?;
    ensure(g.is_maximal(h).unwrap(), || format!("{spec}: not maximal"))
}

fn symmetric_hall() -> Check {
    unique_maximal_hall(GroupSpec::Symmetric(5), "2,3", 24, 5, SearchMode::Exhaustive)?;
    unique_maximal_hall(GroupSpec::Symmetric(7), "2,3", 144, 35, SearchMode::Seeded)?;
    unique_maximal_hall(GroupSpec::Symmetric(8), "2,3", 1152, 35, SearchMode::Seeded)?;
    let s = suite("table1")?;
    Ok(format!(
        "Sym_5, Sym_7, Sym_8 unique maximal classes; table1 {} items",
        s.passed_count
    ))
}

fn psl2_hall() -> Check {
    let sym4 = Fingerprint::of(&atlas::symmetric(4)).unwrap();
    let alt4 = Fingerprint::of(&atlas::alternating(4)).unwrap();
    let d12 = Fingerprint::of(&atlas::dihedral(12)).unwrap();
    let prints = |q: u32, mode| {
        let c = hall_subgroups(&build(GroupSpec::Psl2(q)), &pi("2,3"), mode).unwrap();
        let mut f: Vec<Fingerprint> = c.representatives().map(|h| Fingerprint::of(h).unwrap()).collect();
        f.sort();
        (c, f)
    };
    let (c7, f7) = prints(7, SearchMode::Exhaustive);
    ensure(f7 == vec![sym4, sym4] && !c7.satisfies_c, || format!("psl2:7: {f7:?}"))?;
    let (_, f11) = prints(11, SearchMode::Exhaustive);
    let mut want = vec![alt4, d12];
    want.sort();
    ensure(f11 == want, || format!("psl2:11: {f11:?}"))?;
    let (_, f5) = prints(5, SearchMode::Exhaustive);
    ensure(f5 == vec![alt4], || format!("psl2:5: {f5:?}"))?;
    let (_, f13) = prints(13, SearchMode::Exhaustive);
    ensure(f13 == want, || format!("psl2:13: {f13:?}"))?;
    let s = suite("table3")?;
    Ok(format!(
        "PSL_2(7) two Sym_4 classes, PSL_2(11), PSL_2(13) Alt_4 and D_12, PSL_2(5) Alt_4; table3 {} items",
        s.passed_count
    ))
}

fn m11_hall() -> Check {
    let g = build(GroupSpec::M11);
    let c = hall_subgroups(&g, &pi("2,3"), SearchMode::Seeded).unwrap();
    ensure(c.complete && c.classes.len() == 1 && c.hall_order() == 144, || {
        "no Hall {2,3}".into()
    })?;
    let n = g.normalizer(&sylow(&g, 3).unwrap()).unwrap();
    let same = Fingerprint::of(&n).unwrap() == Fingerprint::of(&c.classes[0].group).unwrap();
    ensure(same, || "Hall {2,3} differs from the Sylow 3-normalizer".into())?;
    let c5 = hall_subgroups(&g, &pi("2,3,5"), SearchMode::Seeded).unwrap();
    ensure(c5.complete && !c5.classes.is_empty() && c5.hall_order() == 720, || {
        "no Hall {2,3,5}".into()
    })?;
    suite("table2-m11")?;
    Ok("orders 144 (= N(Sylow 3)) and 720".into())
}

fn sylow_normalizers() -> Check {
    for spec in [
        GroupSpec::Alternating(6),
        GroupSpec::Alternating(7),
        GroupSpec::Alternating(8),
        GroupSpec::Psl2(9),
        GroupSpec::Psl2(17),
    ] {
        let g = build(spec);
        let s = sylow(&g, 2).unwrap();
        ensure(g.normalizer(&s).unwrap().order() == s.order(), || {
            format!("{spec}: N_G(S) != S")
        })?;
    }
    for q in [5, 11, 13, 19] {
        let g = build(GroupSpec::Psl2(q));
        let n = g.normalizer(&sylow(&g, 2).unwrap()).unwrap();
        let derived = n.derived_subgroup().order();
        ensure(n.order() == 12 && derived == 4, || {
            format!("psl2:{q}: |N| = {}, derived {derived}", n.order())
        })?;
    }
    suite("lemma12")?;
    Ok("5 self-normalizing, 4 with N_G(S) of order 12 and derived order 4".into())
}

fn simple_hall_pronormal() -> Check {
    let s = suite("theorem")?;
    let with_halls = s.items.iter().filter(|i| i.observed.contains("pronormal by")).count();
    Ok(format!(
        "{} (group, pi) pairs, {with_halls} with Hall subgroups, all pronormal",
        s.items.len()
    ))
}

fn reduction_lemmas() -> Check {
    let s = suite("lemmas")?;
    let summary: Vec<String> = s
        .items
        .iter()
        .take(7)
        .map(|i| format!("{} {}", i.name, i.observed.split(' ').next().unwrap_or("?")))
        .collect();
    Ok(summary.join(", "))
}

fn negative_control() -> Check {
    let g = atlas::alternating(4);
    let h = PermGroup::from_generators(vec![Perm::parse("(0 1)(2 3)", Some(4)).unwrap()], 4).unwrap();
    let cert = is_pronormal_definition(&g, &h).unwrap();
    ensure(cert.verdict == Verdict::NotPronormal, || {
        "involution reported pronormal".into()
    })?;
    let x = cert.counterexample.clone().ok_or("no counterexample")?;
    let k = h.conjugate(&x);
    let join = h.join(&k);
    ensure(join.is_abelian() && !h.same_subgroup(&k), || {
        "counterexample does not refute".into()
    })?;
    ensure(verify_certificate(&cert).unwrap(), || {
        "certificate does not verify".into()
    })?;
    let mut count = 0;
    for spec in catalog().into_iter().filter(|s| s.classical_order() <= 500) {
        let g = build(spec);
        let lattice = SubgroupLattice::compute(&g, None, EXHAUSTIVE_BOUND).unwrap();
        for c in lattice.classes().iter().filter(|c| c.size > 1) {
            let h = lattice.subgroup(c);
            if g.is_subnormal(&h).unwrap() {
                count += 1;
                let cert = is_pronormal_definition(&g, &h).unwrap();
                ensure(
                    cert.verdict == Verdict::NotPronormal && verify_certificate(&cert).unwrap(),
                    || format!("{spec}: subnormal subgroup of order {} reported pronormal", h.order()),
                )?;
            }
        }
    }
    Ok(format!(
        "Alt_4 involution refuted; {count} subnormal non-normal classes not pronormal"
    ))
}

fn seeded_matches_exhaustive() -> Check {
    let mut pairs = 0;
    for spec in catalog().into_iter().filter(|s| s.classical_order() <= 2000) {
        let g = build(spec);
        for p in prime_set(g.order()).unwrap().subsets() {
            if p.is_empty() {
                continue;
            }
            let prints = |mode| {
                let c = hall_subgroups(&g, &p, mode).unwrap();
                let mut f: Vec<Fingerprint> = c.representatives().map(|h| Fingerprint::of(h).unwrap()).collect();
                f.sort();
                (c.complete, f)
            };
            let (ce, fe) = prints(SearchMode::Exhaustive);
            let (cs, fs) = prints(SearchMode::Seeded);
            ensure(ce && cs && fe == fs, || {
                format!("{spec} pi {p}: {} vs {} classes", fe.len(), fs.len())
            })?;
            pairs += 1;
        }
    }
    Ok(format!("{pairs} (group, pi) pairs agree"))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 8] = [
        ("symmetric group Hall subgroups", 60, symmetric_hall),
        ("PSL_2(q) Hall {2,3}-subgroups", 120, psl2_hall),
        ("M11 Hall subgroups", 300, m11_hall),
        ("Sylow 2-normalizers", 300, sylow_normalizers),
        (
            "Hall subgroups of simple groups are pronormal",
            900,
            simple_hall_pronormal,
        ),
        ("reduction lemma property suites", 300, reduction_lemmas),
        ("non-pronormal controls", 60, negative_control),
        (
            "seeded search equals exhaustive enumeration",
            300,
            seeded_matches_exhaustive,
        ),
    ];
    let mut failed = 0;
    for (i, (name, budget, check)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = std::panic::catch_unwind(check).unwrap_or_else(|_| Err("panicked".into()));
        let elapsed = start.elapsed();
        let over = elapsed > Duration::from_secs(*budget);
        let (tag, detail) = match (&outcome, over) {
            (Ok(d), false) => ("PASS", d.clone()),
            (Ok(d), true) => ("FAIL", format!("over budget: {d}")),
            (Err(e), _) => ("FAIL", e.clone()),
        };
        if tag == "FAIL" {
            failed += 1;
        }
        println!(
            "criterion {} {tag} {name} ({:.1}s of {budget}s): {detail}",
            i + 1,
            elapsed.as_secs_f64()
        );
    }
    println!("acceptance: {} passed, {failed} failed", criteria.len() - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
