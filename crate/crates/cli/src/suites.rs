//! The verification suites behind `verify`.

use std::fmt;

use clap::ValueEnum;

use pronormal_core::atlas::{
    self, expectations, simple_catalog, Expectation, ExpectationSource, GroupSpec, NormalizerExpectation,
};
use pronormal_core::hall::{sylow, EXHAUSTIVE_BOUND};
use pronormal_core::pi::prime_set;
use pronormal_core::pronormal::sylow_anchor;
use pronormal_core::{
    hall_subgroups, is_pronormal_definition, is_pronormal_reduced, verify_reduction_lemmas, Fingerprint,
    HallClassification, PermGroup, PiSet, ReductionLemma, Result, SearchMode, Verdict,
};

use crate::report::{CheckItem, SuiteReport};
use crate::{build_group, Clock, Common};

/// Minimum number of instances per reduction lemma.
pub const MIN_LEMMA_INSTANCES: usize = 25;

#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, ValueEnum)]
pub enum Suite {
    /// Hall subgroups of symmetric groups.
    #[value(name = "table1")]
    SymmetricHall,
    /// Hall subgroups of M11.
    #[value(name = "table2-m11")]
    M11Hall,
    /// Hall {2,3}- and {2,3,5}-subgroups of PSL2(q), q odd.
    #[value(name = "table3")]
    Psl2Hall,
    /// Normalizers of Sylow 2-subgroups of simple groups.
    #[value(name = "lemma12")]
    SylowNormalizers,
    /// Reduction lemmas on generated instances.
    Lemmas,
    /// Every Hall subgroup of every catalog simple group is pronormal.
    Theorem,
}

impl Suite {
    pub const ALL: [Suite; 6] = [
        Suite::SymmetricHall,
        Suite::M11Hall,
        Suite::Psl2Hall,
        Suite::SylowNormalizers,
        Suite::Lemmas,
        Suite::Theorem,
    ];
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.to_possible_value().expect("no skipped variants").get_name())
    }
}

fn pi(text: &str) -> PiSet {
    text.parse().expect("valid prime set")
}

fn item(name: String, expected: String, observed: String, passed: bool) -> CheckItem {
    CheckItem {
        name,
        expected,
        observed,
        passed,
        skipped: false,
    }
}

fn skipped(name: String, order: u64, limit: u64) -> CheckItem {
    CheckItem {
        name,
        expected: String::new(),
        observed: format!("order {order} exceeds --max-order {limit}"),
        passed: false,
        skipped: true,
    }
}

pub(crate) fn run_suite(suite: Suite, common: &Common, clock: &mut Clock) -> Result<SuiteReport> {
    let items = match suite {
        Suite::SymmetricHall => hall_rows(
            ExpectationSource::SymmetricHall,
            &[
                (GroupSpec::Symmetric(5), "2,3"),
                (GroupSpec::Symmetric(6), "2,3"),
                (GroupSpec::Symmetric(7), "2,3,5"),
                (GroupSpec::Symmetric(7), "2,3"),
                (GroupSpec::Symmetric(8), "2,3"),
            ],
            common,
            clock,
        )?,
        Suite::M11Hall => {
            let mut items = hall_rows(
                ExpectationSource::M11Hall,
                &[(GroupSpec::M11, "2,3"), (GroupSpec::M11, "2,3,5")],
                common,
                clock,
            )?;
            items.extend(m11_sylow3_normalizer(common)?);
            items
        }
        Suite::Psl2Hall => {
            let mut rows = Vec::new();
            for q in [5, 7, 11, 13, 17, 19, 23, 25] {
                rows.push((GroupSpec::Psl2(q), "2,3"));
                if q != 5 && q != 25 && (q * (q * q - 1)) % 5 == 0 {
                    rows.push((GroupSpec::Psl2(q), "2,3,5"));
                }
            }
            let mut items = hall_rows(ExpectationSource::Psl2Hall, &rows, common, clock)?;
            items.push(psl2_7_conjugacy(common)?);
            items
        }
        Suite::SylowNormalizers => sylow_normalizers(common, clock)?,
        Suite::Lemmas => lemma_items(clock)?,
        Suite::Theorem => theorem_items(common, clock)?,
    };
    Ok(SuiteReport::new(&suite.to_string(), items))
}

fn shapes_text(e: &[Expectation]) -> String {
    if e.is_empty() {
        return "no proper Hall subgroup".to_string();
    }
    e.iter()
        .flat_map(|r| {
            r.shapes
                .iter()
                .map(|s| format!("{} (order {})", s.label, s.fingerprint.order))
        })
        .collect::<Vec<_>>()
        .join(", ")
}

fn classes_text(c: &HallClassification) -> String {
    if c.classes.is_empty() {
        return "no Hall subgroup".to_string();
    }
    let parts: Vec<String> = c
        .classes
        .iter()
        .map(|k| format!("order {} x{}", k.group.order(), k.class_size))
        .collect();
    format!("{} class(es): {}", c.classes.len(), parts.join(", "))
}

/// Compares computed Hall classes with expected rows: the set of class
/// fingerprints must equal the set of expected fingerprints, and maximality
/// must hold where the row requires it.
fn hall_rows(
    source: ExpectationSource,
    rows: &[(GroupSpec, &str)],
    common: &Common,
    clock: &mut Clock,
) -> Result<Vec<CheckItem>> {
    let mut items = Vec::new();
    for (spec, pi_text) in rows {
        let pi = pi(pi_text);
        let name = format!("{spec} pi {pi}");
        if spec.classical_order() > common.max_order {
            items.push(skipped(name, spec.classical_order(), common.max_order));
            continue;
        }
        let g = build_group(spec, common)?;
        let expected = expectations(source, spec, &pi)?;
        let mode = if g.order() <= EXHAUSTIVE_BOUND {
            SearchMode::Exhaustive
        } else {
            SearchMode::Seeded
        };
        let c = hall_subgroups(&g, &pi, mode)?;
        let mut ok = c.complete && c.satisfies_e == !expected.is_empty();
        let mut notes = Vec::new();
        let mut expected_prints: Vec<Fingerprint> = expected
            .iter()
            .flat_map(|e| e.shapes.iter().map(|s| s.fingerprint))
            .collect();
        expected_prints.sort();
        expected_prints.dedup();
        let mut found = Vec::new();
        for class in &c.classes {
            let h = &class.group;
            let f = Fingerprint::of(h)?;
            found.push(f);
            let index = g.order() / h.order();
            let normalizer_index = g.order() / g.normalizer(h)?.order();
            // the class size is the normalizer index, computed independently
            ok &= class.class_size == normalizer_index;
            let shape = expected.iter().flat_map(|e| &e.shapes).find(|s| s.fingerprint == f);
            match shape {
                Some(s) => {
                    let mut note = format!("{} index {index}", s.label);
                    if let Some(m) = s.maximal {
                        let is_max = g.is_maximal(h)?;
                        ok &= is_max == m;
                        note += if is_max { ", maximal" } else { ", not maximal" };
                    }
                    notes.push(note);
                }
                None => {
                    ok = false;
                    notes.push(format!("unexpected class ({f})"));
                }
            }
        }
        found.sort();
        found.dedup();
        ok &= found == expected_prints;
        let mut observed = classes_text(&c);
        if !notes.is_empty() {
            observed += &format!("; {}", notes.join("; "));
        }
        observed += &format!("; mode {}", c.search_mode);
        if !c.complete {
            observed += ", incomplete";
        }
        clock.lap(&name);
        items.push(item(name, shapes_text(&expected), observed, ok));
    }
    Ok(items)
}

/// The Hall {2,3}-subgroup of M11 is the normalizer of a Sylow 3-subgroup.
fn m11_sylow3_normalizer(common: &Common) -> Result<Vec<CheckItem>> {
    let name = "m11 Hall {2,3} vs Sylow 3-normalizer".to_string();
    if GroupSpec::M11.classical_order() > common.max_order {
        return Ok(vec![skipped(name, 7920, common.max_order)]);
    }
    let g = build_group(&GroupSpec::M11, common)?;
    let n = g.normalizer(&sylow(&g, 3)?)?;
    let c = hall_subgroups(&g, &pi("2,3"), SearchMode::Seeded)?;
    let nf = Fingerprint::of(&n)?;
    let prints = c.representatives().map(Fingerprint::of).collect::<Result<Vec<_>>>()?;
    let ok = !prints.is_empty() && prints.iter().all(|f| *f == nf);
    Ok(vec![item(
        name,
        format!("fingerprint {nf}"),
        prints.iter().map(Fingerprint::to_string).collect::<Vec<_>>().join("; "),
        ok,
    )])
}

/// PSL2(7) has two classes of Hall {2,3}-subgroups, so C_{2,3} fails.
fn psl2_7_conjugacy(common: &Common) -> Result<CheckItem> {
    let g = build_group(&GroupSpec::Psl2(7), common)?;
    let c = hall_subgroups(&g, &pi("2,3"), SearchMode::Exhaustive)?;
    let sym4 = Fingerprint::of(&atlas::symmetric(4))?;
    let ok = c.classes.len() == 2
        && !c.satisfies_c
        && c.representatives().all(|h| Fingerprint::of(h).is_ok_and(|f| f == sym4));
    Ok(item(
        "psl2:7 pi {2,3} exhaustive class count".to_string(),
        "2 classes of Sym_4, C fails".to_string(),
        format!(
            "{}, C {}",
            classes_text(&c),
            if c.satisfies_c { "holds" } else { "fails" }
        ),
        ok,
    ))
}

fn sylow_normalizers(common: &Common, clock: &mut Clock) -> Result<Vec<CheckItem>> {
    let two = pi("2");
    let mut items = Vec::new();
    for spec in simple_catalog() {
        let name = format!("{spec} Sylow 2-normalizer");
        if spec.classical_order() > common.max_order {
            items.push(skipped(name, spec.classical_order(), common.max_order));
            continue;
        }
        let g = build_group(&spec, common)?;
        let e = expectations(ExpectationSource::SylowNormalizer, &spec, &two)?;
        let s = sylow(&g, 2)?;
        let n = g.normalizer(&s)?;
        let f = Fingerprint::of(&n)?;
        let (expected, ok) = match e[0].normalizer.as_ref().expect("normalizer row") {
            NormalizerExpectation::SelfNormalizing => ("N_G(S) = S".to_string(), n.order() == s.order()),
            NormalizerExpectation::Shape(shape) => (
                format!("{} ({})", shape.label, shape.fingerprint),
                f == shape.fingerprint,
            ),
        };
        let ok = ok && s.order() == e[0].orders[0];
        let observed = format!(
            "|S| = {}, |N_G(S)| = {}, derived {}",
            s.order(),
            n.order(),
            f.derived_order
        );
        clock.lap(&name);
        items.push(item(name, expected, observed, ok));
    }
    Ok(items)
}

fn lemma_items(clock: &mut Clock) -> Result<Vec<CheckItem>> {
    let report = verify_reduction_lemmas(&ReductionLemma::ALL)?;
    clock.lap("instances");
    let mut items = Vec::new();
    for lemma in ReductionLemma::ALL {
        let count = report.count(lemma);
        let failures: Vec<String> = report
            .failures()
            .filter(|i| i.lemma == lemma)
            .map(|i| format!("{}: {}", i.group, i.detail))
            .collect();
        let mut observed = format!("{count} instances, {} failures", failures.len());
        if !failures.is_empty() {
            observed += &format!(" ({})", failures.join("; "));
        }
        items.push(item(
            lemma.to_string(),
            format!("at least {MIN_LEMMA_INSTANCES} instances, all hold"),
            observed,
            count >= MIN_LEMMA_INSTANCES && failures.is_empty(),
        ));
    }
    for i in &report.instances {
        items.push(item(
            format!("{} on {}", i.lemma, i.group),
            "conclusion holds".to_string(),
            i.detail.clone(),
            i.holds,
        ));
    }
    Ok(items)
}

fn theorem_items(common: &Common, clock: &mut Clock) -> Result<Vec<CheckItem>> {
    let mut items = Vec::new();
    for spec in simple_catalog() {
        let order = spec.classical_order();
        if order > common.max_order {
            items.push(skipped(format!("{spec}"), order, common.max_order));
            continue;
        }
        let g = build_group(&spec, common)?;
        let primes = prime_set(order)?;
        for pi in primes.subsets() {
            if pi.len() < 2 || pi.len() >= primes.len() {
                continue;
            }
            let name = format!("{spec} pi {pi}");
            let c = hall_subgroups(&g, &pi, SearchMode::Seeded)?;
            let mut ok = c.complete;
            let mut methods = vec!["definition"];
            if pi.contains(2) {
                methods.push("reduced");
            }
            for h in c.representatives() {
                ok &= all_pronormal(&g, h, pi.contains(2))?;
            }
            let mut observed = classes_text(&c);
            if !c.classes.is_empty() {
                observed += &format!(", pronormal by {}", methods.join(" and "));
            }
            if !c.complete {
                observed += ", incomplete";
            }
            items.push(item(name, "every Hall subgroup pronormal".to_string(), observed, ok));
        }
        clock.lap(&spec.to_string());
    }
    Ok(items)
}

fn all_pronormal(g: &PermGroup, h: &PermGroup, reduced: bool) -> Result<bool> {
    let def = is_pronormal_definition(g, h)?;
    let mut ok = def.verdict == Verdict::Pronormal;
    if reduced {
        let s = sylow_anchor(g, h)?;
        ok &= is_pronormal_reduced(g, h, &s)?.verdict == def.verdict;
    }
    Ok(ok)
}
