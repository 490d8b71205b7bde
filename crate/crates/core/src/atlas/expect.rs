//! Expected Hall subgroups and Sylow 2-normalizers for the catalog groups,
//! stated as fingerprints of explicitly built model groups.

use std::fmt;
use std::str::FromStr;

use super::{alternating, dihedral, epsilon, field::FiniteField, sym_wr_sym, symmetric, DirectProduct, GroupSpec};
use crate::error::{GroupError, Result};
use crate::fingerprint::Fingerprint;
use crate::group::PermGroup;
use crate::perm::Perm;
use crate::pi::{pi_part, prime_set, PiSet};

/// Where an expectation comes from.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ExpectationSource {
    /// Proper Hall subgroups of symmetric groups when `2, 3 ∈ π`.
    SymmetricHall,
    /// Hall subgroups of `M₁₁` when `2, 3 ∈ π`.
    M11Hall,
    /// Hall subgroups of `PSL₂(q)`, `q` odd, `2, 3 ∈ π`, `p ∉ π`.
    Psl2Hall,
    /// Normalizer of a Sylow 2-subgroup of a simple group.
    SylowNormalizer,
}

impl ExpectationSource {
    pub const ALL: [ExpectationSource; 4] = [
        ExpectationSource::SymmetricHall,
        ExpectationSource::M11Hall,
        ExpectationSource::Psl2Hall,
        ExpectationSource::SylowNormalizer,
    ];
}

impl fmt::Display for ExpectationSource {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ExpectationSource::SymmetricHall => "table1",
            ExpectationSource::M11Hall => "table2-m11",
            ExpectationSource::Psl2Hall => "table3",
            ExpectationSource::SylowNormalizer => "lemma12",
        })
    }
}

impl FromStr for ExpectationSource {
    type Err = GroupError;

    fn from_str(s: &str) -> Result<ExpectationSource> {
        ExpectationSource::ALL
            .into_iter()
            .find(|src| src.to_string() == s)
            .ok_or_else(|| GroupError::Unsupported(format!("expectation source {s}")))
    }
}

/// A named structure and its fingerprint.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ShapeDescriptor {
    pub label: String,
    pub fingerprint: Fingerprint,
    /// Whether the subgroup must be maximal in the ambient group.
    pub maximal: Option<bool>,
}

impl ShapeDescriptor {
    fn of(label: &str, model: &PermGroup, maximal: Option<bool>) -> Result<ShapeDescriptor> {
        Ok(ShapeDescriptor {
            label: label.to_string(),
            fingerprint: Fingerprint::of(model)?,
            maximal,
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum NormalizerExpectation {
    /// `N_G(S) = S`.
    SelfNormalizing,
    Shape(ShapeDescriptor),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Expectation {
    pub source: ExpectationSource,
    pub group: GroupSpec,
    pub pi: PiSet,
    pub orders: Vec<u64>,
    pub shapes: Vec<ShapeDescriptor>,
    pub normalizer: Option<NormalizerExpectation>,
}

fn uncovered(source: ExpectationSource, spec: &GroupSpec, pi: &PiSet) -> GroupError {
    GroupError::Uncovered(format!("{source} has no rows for {spec} with pi = {pi}"))
}

/// Expected rows for `(source, spec, π)`. An empty list means the source
/// asserts that no proper Hall π-subgroup exists.
pub fn expectations(source: ExpectationSource, spec: &GroupSpec, pi: &PiSet) -> Result<Vec<Expectation>> {
    spec.validate()?;
    let order = spec.classical_order();
    let relevant = pi.intersection(&prime_set(order)?);
    let row = |orders: Vec<u64>, shapes: Vec<ShapeDescriptor>| Expectation {
        source,
        group: *spec,
        pi: pi.clone(),
        orders,
        shapes,
        normalizer: None,
    };
    let has_2_3 = pi.contains(2) && pi.contains(3);
    match (source, *spec) {
        (ExpectationSource::SymmetricHall, GroupSpec::Symmetric(n)) if has_2_3 => {
            let below = prime_set((1..n as u64).product::<u64>().max(1))?;
            let mut rows = Vec::new();
            if crate::pi::is_prime(n as u64) && relevant == below {
                let m = symmetric(n - 1);
                rows.push(row(
                    vec![m.order()],
                    vec![ShapeDescriptor::of(&format!("Sym_{}", n - 1), &m, Some(true))?],
                ));
            }
            if relevant == PiSet::new([2, 3])? {
                if n == 7 {
                    let m = DirectProduct::new(&[symmetric(3), symmetric(4)])?.group;
                    rows.push(row(
                        vec![144],
                        vec![ShapeDescriptor::of("Sym_3 x Sym_4", &m, Some(true))?],
                    ));
                }
                if n == 8 {
                    let m = sym_wr_sym(4, 2);
                    rows.push(row(
                        vec![1152],
                        vec![ShapeDescriptor::of("Sym_4 wr Sym_2", &m, Some(true))?],
                    ));
                }
            }
            Ok(rows)
        }
        (ExpectationSource::M11Hall, GroupSpec::M11) if has_2_3 => {
            let primes: Vec<u64> = relevant.primes().collect();
            Ok(match primes.as_slice() {
                [2, 3] => vec![row(
                    vec![144],
                    vec![ShapeDescriptor::of("3^2:Q_8.2", &affine_semidihedral(), None)?],
                )],
                [2, 3, 5] => vec![row(vec![720], vec![ShapeDescriptor::of("Alt_6.2", &m10(), None)?])],
                _ => Vec::new(),
            })
        }
        (ExpectationSource::Psl2Hall, GroupSpec::Psl2(q)) if q % 2 == 1 && has_2_3 => {
            let q64 = q as u64;
            let p = prime_set(q64)?.primes().next().unwrap();
            if pi.contains(p) {
                return Err(uncovered(source, spec, pi));
            }
            let eps = epsilon(q64)?;
            let q_minus_eps = (q64 as i64 - eps) as u64;
            let mut rows = Vec::new();
            if relevant.is_subset(&prime_set(q_minus_eps)?) {
                let n = pi_part(q_minus_eps, pi);
                rows.push(row(
                    vec![n],
                    vec![ShapeDescriptor::of(&format!("D_{n}"), &dihedral(n as usize), None)?],
                ));
            }
            let two_three = PiSet::new([2, 3])?;
            let square = q64 * q64 - 1;
            if relevant == two_three && pi_part(square, &two_three) == 24 {
                rows.push(row(
                    vec![12],
                    vec![ShapeDescriptor::of("Alt_4", &alternating(4), None)?],
                ));
            }
            if relevant == two_three && pi_part(square, &two_three) == 48 {
                rows.push(row(vec![24], vec![ShapeDescriptor::of("Sym_4", &symmetric(4), None)?]));
            }
            let two_three_five = PiSet::new([2, 3, 5])?;
            if relevant == two_three_five && pi_part(square, &two_three_five) == 120 {
                rows.push(row(
                    vec![60],
                    vec![ShapeDescriptor::of("Alt_5", &alternating(5), None)?],
                ));
            }
            Ok(rows)
        }
        (ExpectationSource::SylowNormalizer, _) if *pi == PiSet::new([2])? && spec.is_simple_nonabelian() => {
            let alt4 = || ShapeDescriptor::of("Alt_4", &alternating(4), None);
            let normalizer = match *spec {
                GroupSpec::Psl2(q) if q % 2 == 0 => {
                    let label = format!("Borel subgroup of order {}", q * (q - 1));
                    NormalizerExpectation::Shape(ShapeDescriptor::of(&label, &borel(q as usize)?, None)?)
                }
                GroupSpec::Psl2(q) if q > 3 && matches!(q % 8, 3 | 5) => NormalizerExpectation::Shape(alt4()?),
                // Alt_5 is PSL_2(5)
                GroupSpec::Alternating(5) => NormalizerExpectation::Shape(alt4()?),
                _ => NormalizerExpectation::SelfNormalizing,
            };
            let two_part = pi_part(order, pi);
            Ok(vec![Expectation {
                source,
                group: *spec,
                pi: pi.clone(),
                orders: vec![two_part],
                shapes: Vec::new(),
                normalizer: Some(normalizer),
            }])
        }
        _ => Err(uncovered(source, spec, pi)),
    }
}

/// `x ↦ φ(x)` on the projective line over `f`, with `∞ = q` fixed.
fn projective_map(f: &FiniteField, phi: impl Fn(u8) -> u8) -> Perm {
    let q = f.order();
    let images: Vec<usize> = (0..=q)
        .map(|x| if x == q { q } else { phi(x as u8) as usize })
        .collect();
    Perm::from_images(&images).unwrap()
}

/// `M₁₀ = Alt₆·2`: `PSL₂(9)` extended by `x ↦ ω x³`.
pub fn m10() -> PermGroup {
    let f = FiniteField::new(9).unwrap();
    let w = f.primitive();
    let twist = projective_map(&f, |x| f.mul(w, f.pow(x, 3)));
    let base = super::psl2(9).unwrap();
    let mut gens = base.generators().to_vec();
    gens.push(twist);
    PermGroup::from_generators(gens, 10).unwrap()
}

/// `3² : SD₁₆`, the affine group of `F₃²` over the semidihedral Sylow
/// 2-subgroup of `GL₂(3)`.
pub fn affine_semidihedral() -> PermGroup {
    let f = FiniteField::new(3).unwrap();
    let point = |x: u8, y: u8| 3 * x as usize + y as usize;
    let affine = |m: [u8; 4], t: [u8; 2]| -> Perm {
        let images: Vec<usize> = (0..9u8)
            .map(|v| {
                let (x, y) = (v / 3, v % 3);
                let nx = f.add(f.add(f.mul(m[0], x), f.mul(m[1], y)), t[0]);
                let ny = f.add(f.add(f.mul(m[2], x), f.mul(m[3], y)), t[1]);
                point(nx, ny)
            })
            .collect();
        Perm::from_images(&images).unwrap()
    };
    let gens = vec![
        affine([1, 0, 0, 1], [1, 0]),
        affine([1, 0, 0, 1], [0, 1]),
        affine([1, 1, 2, 1], [0, 0]),
        affine([1, 0, 0, 2], [0, 0]),
    ];
    PermGroup::from_generators(gens, 9).unwrap()
}

/// The affine group `x ↦ ax + b` of `F_q`.
pub fn borel(q: usize) -> Result<PermGroup> {
    let f = FiniteField::new(q)?;
    let perm =
        |phi: &dyn Fn(u8) -> u8| Perm::from_images(&(0..q as u8).map(|x| phi(x) as usize).collect::<Vec<_>>()).unwrap();
    // conjugating x + 1 by the scalings gives every translation
    let gens = vec![perm(&|x| f.mul(f.primitive(), x)), perm(&|x| f.add(x, 1))];
    PermGroup::from_generators(gens, q)
}

/// Every model group used by the expectations, labelled.
pub fn model_groups() -> Vec<(String, PermGroup)> {
    let mut out = vec![
        ("Sym_4".to_string(), symmetric(4)),
        ("Sym_6".to_string(), symmetric(6)),
        (
            "Sym_3 x Sym_4".to_string(),
            DirectProduct::new(&[symmetric(3), symmetric(4)]).unwrap().group,
        ),
        ("Sym_4 wr Sym_2".to_string(), sym_wr_sym(4, 2)),
        ("3^2:Q_8.2".to_string(), affine_semidihedral()),
        ("Alt_6.2".to_string(), m10()),
        ("Alt_4".to_string(), alternating(4)),
        ("Alt_5".to_string(), alternating(5)),
    ];
    for n in [4, 8, 12, 24] {
        out.push((format!("D_{n}"), dihedral(n)));
    }
    for q in [4, 8, 16] {
        out.push((format!("Borel subgroup of order {}", q * (q - 1)), borel(q).unwrap()));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pi(s: &str) -> PiSet {
        s.parse().unwrap()
    }

    #[test]
    fn model_orders() {
        assert_eq!(m10().order(), 720);
        assert_eq!(affine_semidihedral().order(), 144);
        assert_eq!(borel(8).unwrap().order(), 56);
        assert_eq!(borel(4).unwrap().order(), 12);
        assert_eq!(borel(9).unwrap().order(), 72);
    }

    #[test]
    fn m10_is_not_sym6() {
        let m = Fingerprint::of(&m10()).unwrap();
        assert_eq!(m.derived_order, 360);
        assert_ne!(m, Fingerprint::of(&symmetric(6)).unwrap());
    }

    #[test]
    fn symmetric_rows() {
        let rows = expectations(ExpectationSource::SymmetricHall, &GroupSpec::Symmetric(8), &pi("2,3")).unwrap();
        assert_eq!(rows.len(), 1);
        assert_eq!(rows[0].orders, vec![1152]);
        assert_eq!(rows[0].shapes[0].maximal, Some(true));
        let rows = expectations(ExpectationSource::SymmetricHall, &GroupSpec::Symmetric(7), &pi("2,3")).unwrap();
        assert_eq!(rows[0].orders, vec![144]);
        let rows = expectations(ExpectationSource::SymmetricHall, &GroupSpec::Symmetric(5), &pi("2,3")).unwrap();
        assert_eq!(rows[0].orders, vec![24]);
        let rows = expectations(ExpectationSource::SymmetricHall, &GroupSpec::Symmetric(6), &pi("2,3")).unwrap();
        assert!(rows.is_empty());
        assert!(expectations(ExpectationSource::SymmetricHall, &GroupSpec::Symmetric(6), &pi("2")).is_err());
    }

    #[test]
    fn psl2_rows() {
        let rows = expectations(ExpectationSource::Psl2Hall, &GroupSpec::Psl2(13), &pi("2,3")).unwrap();
        let labels: Vec<&str> = rows.iter().map(|r| r.shapes[0].label.as_str()).collect();
        assert_eq!(labels, ["D_12", "Alt_4"]);
        let rows = expectations(ExpectationSource::Psl2Hall, &GroupSpec::Psl2(7), &pi("2,3")).unwrap();
        assert_eq!(rows.len(), 1);
        assert_eq!(rows[0].orders, vec![24]);
        let rows = expectations(ExpectationSource::Psl2Hall, &GroupSpec::Psl2(11), &pi("2,3,5")).unwrap();
        assert_eq!(rows.iter().map(|r| r.orders[0]).collect::<Vec<_>>(), vec![60]);
        assert!(expectations(ExpectationSource::Psl2Hall, &GroupSpec::Psl2(9), &pi("2,3")).is_err());
        assert!(expectations(ExpectationSource::Psl2Hall, &GroupSpec::Psl2(8), &pi("2,3")).is_err());
    }

    #[test]
    fn m11_rows() {
        let rows = expectations(ExpectationSource::M11Hall, &GroupSpec::M11, &pi("2,3,5")).unwrap();
        assert_eq!(rows[0].orders, vec![720]);
        assert!(expectations(ExpectationSource::M11Hall, &GroupSpec::M11, &pi("2,3,11"))
            .unwrap()
            .is_empty());
    }

    #[test]
    fn normalizer_rows() {
        let two = pi("2");
        let row = |spec| {
            expectations(ExpectationSource::SylowNormalizer, &spec, &two)
                .unwrap()
                .remove(0)
        };
        assert!(matches!(
            row(GroupSpec::Psl2(11)).normalizer,
            Some(NormalizerExpectation::Shape(_))
        ));
        assert_eq!(
            row(GroupSpec::Psl2(17)).normalizer,
            Some(NormalizerExpectation::SelfNormalizing)
        );
        assert_eq!(
            row(GroupSpec::Alternating(7)).normalizer,
            Some(NormalizerExpectation::SelfNormalizing)
        );
        assert!(expectations(ExpectationSource::SylowNormalizer, &GroupSpec::Symmetric(5), &two).is_err());
    }

    #[test]
    fn source_names_round_trip() {
        for s in ExpectationSource::ALL {
            assert_eq!(s.to_string().parse::<ExpectationSource>().unwrap(), s);
        }
    }
}
