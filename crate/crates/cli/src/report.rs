//! Serializable reports and their text rendering.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use pronormal_core::hall::HallClassification;
use pronormal_core::{Fingerprint, Perm, PermGroup, PronormalityCertificate, Result};

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub engine_version: String,
    /// Canonical form of the command that produced the report.
    pub command: String,
    pub seed: u64,
    pub group: Option<String>,
    pub pi: Option<String>,
    pub results: Results,
    pub passed: bool,
    /// False when any search stopped at a cap.
    pub complete: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub timings: Option<Vec<Timing>>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Timing {
    pub phase: String,
    pub millis: u128,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Results {
    Hall(HallReport),
    Pronormal { certificates: Vec<CertificateReport> },
    Verify(SuiteReport),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FingerprintReport {
    pub order: u64,
    pub derived_order: u64,
    pub abelianization_order: u64,
    pub exponent: u64,
    pub nilpotent: bool,
    pub solvable: bool,
}

impl From<Fingerprint> for FingerprintReport {
    fn from(f: Fingerprint) -> FingerprintReport {
        FingerprintReport {
            order: f.order,
            derived_order: f.derived_order,
            abelianization_order: f.abelianization_order,
            exponent: f.exponent,
            nilpotent: f.nilpotent,
            solvable: f.solvable,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ClassReport {
    pub order: u64,
    pub class_size: u64,
    pub generators: Vec<String>,
    pub fingerprint: FingerprintReport,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct HallReport {
    pub hall_order: u64,
    pub mode: String,
    pub complete: bool,
    pub satisfies_e: bool,
    pub satisfies_c: bool,
    pub satisfies_d: bool,
    pub d_check: String,
    pub classes: Vec<ClassReport>,
}

impl HallReport {
    pub fn from_classification(c: &HallClassification) -> Result<HallReport> {
        let classes = c
            .classes
            .iter()
            .map(|class| {
                Ok(ClassReport {
                    order: class.group.order(),
                    class_size: class.class_size,
                    generators: generator_strings(&class.group),
                    fingerprint: Fingerprint::of(&class.group)?.into(),
                })
            })
            .collect::<Result<_>>()?;
        Ok(HallReport {
            hall_order: c.hall_order(),
            mode: c.search_mode.to_string(),
            complete: c.complete,
            satisfies_e: c.satisfies_e,
            satisfies_c: c.satisfies_c,
            satisfies_d: c.satisfies_d,
            d_check: c.d_check.to_string(),
            classes,
        })
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct TestReport {
    pub g: String,
    pub join_order: u64,
    pub witness: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CertificateReport {
    pub degree: usize,
    pub subject_order: u64,
    pub subject_generators: Vec<String>,
    pub method: String,
    pub verdict: String,
    pub anchor_generators: Option<Vec<String>>,
    pub complexion: Option<Vec<u64>>,
    pub tests: Vec<TestReport>,
    pub counterexample: Option<String>,
    /// The certificate re-checked from its own data.
    pub reverified: bool,
}

impl CertificateReport {
    pub fn new(cert: &PronormalityCertificate, reverified: bool) -> CertificateReport {
        CertificateReport {
            degree: cert.ambient.degree(),
            subject_order: cert.subject.order(),
            subject_generators: generator_strings(&cert.subject),
            method: cert.method.to_string(),
            verdict: cert.verdict.to_string(),
            anchor_generators: cert.anchor.as_ref().map(generator_strings),
            complexion: cert.complexion.clone(),
            tests: cert
                .tests
                .iter()
                .map(|t| TestReport {
                    g: t.g.to_string(),
                    join_order: t.join_order,
                    witness: t.witness.as_ref().map(Perm::to_string),
                })
                .collect(),
            counterexample: cert.counterexample.as_ref().map(Perm::to_string),
            reverified,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CheckItem {
    pub name: String,
    pub expected: String,
    pub observed: String,
    pub passed: bool,
    #[serde(default)]
    pub skipped: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SuiteReport {
    pub suite: String,
    pub passed_count: usize,
    pub failed_count: usize,
    pub skipped_count: usize,
    pub items: Vec<CheckItem>,
}

impl SuiteReport {
    pub fn new(suite: &str, items: Vec<CheckItem>) -> SuiteReport {
        let skipped_count = items.iter().filter(|i| i.skipped).count();
        let failed_count = items.iter().filter(|i| !i.passed && !i.skipped).count();
        SuiteReport {
            suite: suite.to_string(),
            passed_count: items.len() - failed_count - skipped_count,
            failed_count,
            skipped_count,
            items,
        }
    }
}

pub fn generator_strings(g: &PermGroup) -> Vec<String> {
    g.generators().iter().map(Perm::to_string).collect()
}

fn yes(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

impl Report {
    pub fn to_structured(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("reports serialize");
        s.push('\n');
        s
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let w = &mut out;
        let _ = writeln!(w, "{}", self.command);
        if let Some(g) = &self.group {
            let _ = writeln!(w, "group {g}");
        }
        if let Some(pi) = &self.pi {
            let _ = writeln!(w, "pi {pi}");
        }
        match &self.results {
            Results::Hall(h) => {
                let _ = writeln!(
                    w,
                    "hall order {}, mode {}, {}",
                    h.hall_order,
                    h.mode,
                    if h.complete { "complete" } else { "incomplete" }
                );
                let _ = writeln!(
                    w,
                    "E {}, C {}, D {} ({})",
                    yes(h.satisfies_e),
                    yes(h.satisfies_c),
                    yes(h.satisfies_d),
                    h.d_check
                );
                for (i, c) in h.classes.iter().enumerate() {
                    let f = &c.fingerprint;
                    let _ = writeln!(
                        w,
                        "class {}: order {}, {} conjugates, derived {}, abelianization {}, exponent {}",
                        i + 1,
                        c.order,
                        c.class_size,
                        f.derived_order,
                        f.abelianization_order,
                        f.exponent
                    );
                    let _ = writeln!(w, "  generators {}", c.generators.join(", "));
                }
            }
            Results::Pronormal { certificates } => {
                for c in certificates {
                    let _ = writeln!(
                        w,
                        "subgroup of order {} <{}>: {} by {} ({} tests, reverified {})",
                        c.subject_order,
                        c.subject_generators.join(", "),
                        c.verdict,
                        c.method,
                        c.tests.len(),
                        yes(c.reverified)
                    );
                    if let Some(k) = &c.complexion {
                        let k: Vec<String> = k.iter().map(u64::to_string).collect();
                        let _ = writeln!(w, "  complexion ({})", k.join(","));
                    }
                    if let Some(x) = &c.counterexample {
                        let _ = writeln!(w, "  counterexample g = {x}");
                    }
                }
            }
            Results::Verify(s) => {
                for item in &s.items {
                    let tag = if item.skipped {
                        "SKIP"
                    } else if item.passed {
                        "PASS"
                    } else {
                        "FAIL"
                    };
                    let _ = writeln!(w, "{tag} {}: {}", item.name, item.observed);
                    if !item.passed && !item.skipped {
                        let _ = writeln!(w, "     expected {}", item.expected);
                    }
                }
                let _ = writeln!(
                    w,
                    "{}: {} passed, {} failed, {} skipped",
                    s.suite, s.passed_count, s.failed_count, s.skipped_count
                );
            }
        }
        if let Some(t) = &self.timings {
            for t in t {
                let _ = writeln!(w, "time {}: {} ms", t.phase, t.millis);
            }
        }
        let _ = writeln!(w, "{}", if self.passed { "ok" } else { "FAILED" });
        out
    }
}
