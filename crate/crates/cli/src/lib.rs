//! Command-line front end: Hall classifications, pronormality certificates
//! and the verification suites, reported as text or JSON.

pub mod report;
pub mod suites;

use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};

use pronormal_core::atlas::{self, GroupSpec};
use pronormal_core::group::DEFAULT_SEED;
use pronormal_core::hall::{sylow, HallOptions};
use pronormal_core::pronormal::sylow_anchor;
use pronormal_core::{
    classify, hall_subgroups, is_pronormal_definition, is_pronormal_reduced, is_pronormal_sylow_tower,
    verify_certificate, GroupError, Perm, PermGroup, PiSet, PronormalityCertificate, SearchMode,
};

use report::{CertificateReport, HallReport, Report, Results, Timing};
pub use suites::Suite;

pub const DEFAULT_MAX_ORDER: u64 = 100_000;

/// Exit status: success, a failed check, or input outside the supported scope.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Status {
    Ok = 0,
    Failed = 1,
    Unsupported = 2,
}

#[derive(Parser, Debug, Clone)]
#[command(
    name = "pronormal",
    version,
    about = "Hall subgroups and pronormality in finite permutation groups"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    #[command(flatten)]
    pub common: Common,
}

#[derive(Args, Debug, Clone)]
pub struct Common {
    /// Seed for the randomized Schreier-Sims.
    #[arg(long, global = true, default_value_t = DEFAULT_SEED)]
    pub seed: u64,
    /// Refuse groups above this order.
    #[arg(long, global = true, default_value_t = DEFAULT_MAX_ORDER)]
    pub max_order: u64,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    /// Include wall-clock time per phase (makes reports nondeterministic).
    #[arg(long, global = true)]
    pub timings: bool,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Structured,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Mode {
    Exhaustive,
    Seeded,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum MethodArg {
    Definition,
    Reduced,
    Tower,
    Both,
}

#[derive(Subcommand, Debug, Clone)]
pub enum Command {
    /// Classify the Hall π-subgroups of a catalog group.
    Hall {
        group: GroupSpec,
        #[arg(long)]
        pi: PiSet,
        #[arg(long, value_enum)]
        mode: Option<Mode>,
    },
    /// Decide pronormality of a subgroup.
    Pronormal {
        group: GroupSpec,
        /// `hall:2,3`, `sylow:2` or `gens:(0 1)(2 3);(0 1 2)`.
        #[arg(long)]
        subgroup: Selector,
        #[arg(long, value_enum, default_value_t = MethodArg::Definition)]
        method: MethodArg,
    },
    /// Run a verification suite.
    Verify {
        #[arg(value_enum)]
        suite: Suite,
    },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Selector {
    Hall(PiSet),
    Sylow(u64),
    Gens(Vec<String>),
}

impl FromStr for Selector {
    type Err = String;

    fn from_str(s: &str) -> Result<Selector, String> {
        let (kind, rest) = s.split_once(':').ok_or("expected hall:, sylow: or gens:")?;
        match kind {
            "hall" => rest.parse().map(Selector::Hall).map_err(|e: GroupError| e.to_string()),
            "sylow" => rest
                .trim()
                .parse()
                .map(Selector::Sylow)
                .map_err(|_| format!("bad prime {rest:?}")),
            "gens" => Ok(Selector::Gens(
                rest.split(';')
                    .map(|g| g.trim().to_string())
                    .filter(|g| !g.is_empty())
                    .collect(),
            )),
            _ => Err(format!("unknown selector {kind:?}")),
        }
    }
}

impl fmt::Display for Selector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Selector::Hall(pi) => {
                let p: Vec<String> = pi.primes().map(|p| p.to_string()).collect();
                write!(f, "hall:{}", p.join(","))
            }
            Selector::Sylow(p) => write!(f, "sylow:{p}"),
            Selector::Gens(g) => write!(f, "gens:{}", g.join(";")),
        }
    }
}

/// Canonical command echo, independent of how the flags were spelled.
fn command_echo(cli: &Cli) -> String {
    match &cli.command {
        Command::Hall { group, pi, mode } => {
            let p: Vec<String> = pi.primes().map(|p| p.to_string()).collect();
            let mut s = format!("hall {group} --pi {}", p.join(","));
            if let Some(m) = mode {
                s += match m {
                    Mode::Exhaustive => " --mode exhaustive",
                    Mode::Seeded => " --mode seeded",
                };
            }
            s
        }
        Command::Pronormal {
            group,
            subgroup,
            method,
        } => {
            let m = match method {
                MethodArg::Definition => "definition",
                MethodArg::Reduced => "reduced",
                MethodArg::Tower => "tower",
                MethodArg::Both => "both",
            };
            format!("pronormal {group} --subgroup '{subgroup}' --method {m}")
        }
        Command::Verify { suite } => format!("verify {suite}"),
    }
}

/// Phase timer; records only when timings were requested.
pub(crate) struct Clock {
    enabled: bool,
    start: Instant,
    pub(crate) phases: Vec<Timing>,
}

impl Clock {
    pub(crate) fn new(enabled: bool) -> Clock {
        Clock {
            enabled,
            start: Instant::now(),
            phases: Vec::new(),
        }
    }

    pub(crate) fn lap(&mut self, phase: &str) {
        if self.enabled {
            self.phases.push(Timing {
                phase: phase.to_string(),
                millis: self.start.elapsed().as_millis(),
            });
            self.start = Instant::now();
        }
    }

    fn finish(self) -> Option<Vec<Timing>> {
        self.enabled.then_some(self.phases)
    }
}

pub fn build_group(spec: &GroupSpec, common: &Common) -> Result<PermGroup, GroupError> {
    if spec.classical_order() > common.max_order {
        return Err(GroupError::TooLarge {
            order: spec.classical_order(),
            limit: common.max_order,
            operation: "this command (raise --max-order)",
        });
    }
    Ok(atlas::build(spec)?.with_seed(common.seed))
}

/// Runs a parsed command. Every error means the input is outside what the
/// command supports, so it carries [`Status::Unsupported`].
pub fn run(cli: &Cli) -> Result<(Report, Status), (GroupError, Status)> {
    let wrap = |e: GroupError| (e, Status::Unsupported);
    let mut clock = Clock::new(cli.common.timings);
    let (group, pi, results, passed, complete) = match &cli.command {
        Command::Hall { group, pi, mode } => {
            let g = build_group(group, &cli.common).map_err(wrap)?;
            clock.lap("build");
            let mode = mode.map(|m| match m {
                Mode::Exhaustive => SearchMode::Exhaustive,
                Mode::Seeded => SearchMode::Seeded,
            });
            let options = HallOptions {
                mode,
                ..HallOptions::default()
            };
            let c = classify(&g, pi, &options).map_err(wrap)?;
            clock.lap("classify");
            let h = HallReport::from_classification(&c).map_err(wrap)?;
            clock.lap("report");
            let complete = h.complete;
            (
                Some(group.to_string()),
                Some(pi.to_string()),
                Results::Hall(h),
                true,
                complete,
            )
        }
        Command::Pronormal {
            group,
            subgroup,
            method,
        } => {
            let g = build_group(group, &cli.common).map_err(wrap)?;
            clock.lap("build");
            let (subjects, pi) = resolve(&g, subgroup).map_err(wrap)?;
            clock.lap("select");
            let mut certificates = Vec::new();
            let mut passed = true;
            for h in &subjects {
                let certs = decide(&g, h, *method).map_err(wrap)?;
                if certs.windows(2).any(|w| w[0].verdict != w[1].verdict) {
                    passed = false;
                }
                for c in &certs {
                    let ok = verify_certificate(c).map_err(wrap)?;
                    passed &= ok;
                    certificates.push(CertificateReport::new(c, ok));
                }
            }
            clock.lap("decide");
            (
                Some(group.to_string()),
                pi,
                Results::Pronormal { certificates },
                passed,
                true,
            )
        }
        Command::Verify { suite } => {
            let s = suites::run_suite(*suite, &cli.common, &mut clock).map_err(wrap)?;
            let passed = s.failed_count == 0;
            (None, None, Results::Verify(s), passed, true)
        }
    };
    let report = Report {
        engine_version: env!("CARGO_PKG_VERSION").to_string(),
        command: command_echo(cli),
        seed: cli.common.seed,
        group,
        pi,
        results,
        passed,
        complete,
        timings: clock.finish(),
    };
    let status = if report.passed { Status::Ok } else { Status::Failed };
    Ok((report, status))
}

fn resolve(g: &PermGroup, selector: &Selector) -> Result<(Vec<PermGroup>, Option<String>), GroupError> {
    match selector {
        Selector::Hall(pi) => {
            let c = hall_subgroups(g, pi, SearchMode::Seeded)?;
            if !c.complete {
                return Err(GroupError::Unsupported(
                    "Hall search stopped at its candidate cap".into(),
                ));
            }
            let reps: Vec<PermGroup> = c.representatives().cloned().collect();
            if reps.is_empty() {
                return Err(GroupError::Unsupported(format!("no Hall {pi}-subgroup exists")));
            }
            Ok((reps, Some(pi.to_string())))
        }
        Selector::Sylow(p) => {
            if !pronormal_core::pi::is_prime(*p) {
                return Err(GroupError::NotPrime(*p));
            }
            Ok((vec![sylow(g, *p)?], Some(PiSet::new([*p])?.to_string())))
        }
        Selector::Gens(gens) => {
            let perms = gens
                .iter()
                .map(|s| Perm::parse(s, Some(g.degree())))
                .collect::<Result<Vec<_>, _>>()?;
            let h = PermGroup::from_generators(perms, g.degree())?.with_seed(g.seed());
            if !h.is_subgroup_of(g) {
                return Err(GroupError::NotContained { what: "subgroup" });
            }
            Ok((vec![h], None))
        }
    }
}

fn decide(g: &PermGroup, h: &PermGroup, method: MethodArg) -> Result<Vec<PronormalityCertificate>, GroupError> {
    let reduced = || is_pronormal_reduced(g, h, &sylow_anchor(g, h)?);
    Ok(match method {
        MethodArg::Definition => vec![is_pronormal_definition(g, h)?],
        MethodArg::Reduced => vec![reduced()?],
        MethodArg::Both => vec![is_pronormal_definition(g, h)?, reduced()?],
        MethodArg::Tower => vec![is_pronormal_sylow_tower(g, h)?
            .ok_or_else(|| GroupError::Unsupported("the subgroup has no Sylow tower".into()))?],
    })
}

/// Renders the report in the requested format.
pub fn render(report: &Report, format: Format) -> String {
    match format {
        Format::Text => report.to_text(),
        Format::Structured => report.to_structured(),
    }
}
