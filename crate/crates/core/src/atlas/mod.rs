//! Catalog groups as permutation groups, and the expected Hall and
//! Sylow-normalizer classifications they are checked against.

mod expect;
mod field;

use std::fmt;
use std::str::FromStr;

pub use expect::{
    affine_semidihedral, borel, expectations, m10, model_groups, Expectation, ExpectationSource, NormalizerExpectation,
    ShapeDescriptor,
};
pub use field::FiniteField;

use crate::error::{GroupError, Result};
use crate::group::PermGroup;
use crate::perm::{gcd, Perm, MAX_DEGREE};
use crate::pi::factorize;

/// Field orders for which `psl2:q` is part of the catalog.
pub const PSL2_ORDERS: [u32; 13] = [4, 5, 7, 8, 9, 11, 13, 16, 17, 19, 23, 25, 27];
/// Field orders for `sl2:q` and `gl2:q`.
pub const SL2_ORDERS: [u32; 4] = [3, 5, 7, 9];

/// A catalog group, parsed from compact text such as `sym:8` or `psl2:11`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum GroupSpec {
    Symmetric(usize),
    Alternating(usize),
    /// Dihedral group of the given order.
    Dihedral(usize),
    Cyclic(usize),
    Psl2(u32),
    Psl3(u32),
    Sl2(u32),
    Gl2(u32),
    M11,
    Klein,
    /// `Sym_a ≀ Sym_b` in its imprimitive action on `a·b` points.
    SymWrSym(usize, usize),
}

fn cyclic_degree(m: usize) -> usize {
    if m == 1 {
        return 1;
    }
    factorize(m as u64).iter().map(|&(p, e)| p.pow(e) as usize).sum()
}

impl GroupSpec {
    /// Checks the supported parameter ranges.
    pub fn validate(&self) -> Result<()> {
        let ok = match *self {
            GroupSpec::Symmetric(n) | GroupSpec::Alternating(n) => (1..=10).contains(&n),
            GroupSpec::Dihedral(m) => m >= 2 && m % 2 == 0 && m <= 2 * MAX_DEGREE,
            GroupSpec::Cyclic(m) => m >= 1 && cyclic_degree(m) <= MAX_DEGREE,
            GroupSpec::Psl2(q) => PSL2_ORDERS.contains(&q),
            GroupSpec::Psl3(q) => q == 2 || q == 3,
            GroupSpec::Sl2(q) | GroupSpec::Gl2(q) => SL2_ORDERS.contains(&q),
            GroupSpec::M11 | GroupSpec::Klein => true,
            GroupSpec::SymWrSym(a, b) => (1..=10).contains(&a) && (1..=10).contains(&b) && a * b <= 16,
        };
        if ok {
            Ok(())
        } else {
            Err(GroupError::Unsupported(self.to_string()))
        }
    }

    /// Order predicted by the classical formula for the family.
    pub fn classical_order(&self) -> u64 {
        let fact = |n: usize| (1..=n as u64).product::<u64>();
        match *self {
            GroupSpec::Symmetric(n) => fact(n),
            GroupSpec::Alternating(n) => (fact(n) / 2).max(1),
            GroupSpec::Dihedral(m) | GroupSpec::Cyclic(m) => m as u64,
            GroupSpec::Psl2(q) => {
                let q = q as u64;
                q * (q * q - 1) / gcd(2, q - 1)
            }
            GroupSpec::Psl3(q) => {
                let q = q as u64;
                q.pow(3) * (q * q - 1) * (q.pow(3) - 1) / gcd(3, q - 1)
            }
            GroupSpec::Sl2(q) => {
                let q = q as u64;
                q * (q * q - 1)
            }
            GroupSpec::Gl2(q) => {
                let q = q as u64;
                (q * q - 1) * (q * q - q)
            }
            GroupSpec::M11 => 7920,
            GroupSpec::Klein => 4,
            GroupSpec::SymWrSym(a, b) => fact(a).pow(b as u32) * fact(b),
        }
    }

    /// True for the nonabelian simple groups of the catalog.
    pub fn is_simple_nonabelian(&self) -> bool {
        match *self {
            GroupSpec::Alternating(n) => n >= 5,
            GroupSpec::Psl2(q) => q >= 4,
            GroupSpec::Psl3(_) | GroupSpec::M11 => true,
            _ => false,
        }
    }
}

impl fmt::Display for GroupSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            GroupSpec::Symmetric(n) => write!(f, "sym:{n}"),
            GroupSpec::Alternating(n) => write!(f, "alt:{n}"),
            GroupSpec::Dihedral(m) => write!(f, "dih:{m}"),
            GroupSpec::Cyclic(m) => write!(f, "cyc:{m}"),
            GroupSpec::Psl2(q) => write!(f, "psl2:{q}"),
            GroupSpec::Psl3(q) => write!(f, "psl3:{q}"),
            GroupSpec::Sl2(q) => write!(f, "sl2:{q}"),
            GroupSpec::Gl2(q) => write!(f, "gl2:{q}"),
            GroupSpec::M11 => f.write_str("m11"),
            GroupSpec::Klein => f.write_str("klein"),
            GroupSpec::SymWrSym(a, b) => write!(f, "symwr:{a},{b}"),
        }
    }
}

impl FromStr for GroupSpec {
    type Err = GroupError;

    fn from_str(s: &str) -> Result<GroupSpec> {
        let bad = || GroupError::Unsupported(s.to_string());
        let s = s.trim();
        let (family, arg) = match s.split_once(':') {
            Some((f, a)) => (f, Some(a)),
            None => (s, None),
        };
        let num = |a: Option<&str>| -> Result<usize> { a.ok_or_else(bad)?.trim().parse::<usize>().map_err(|_| bad()) };
        let spec = match family.to_ascii_lowercase().as_str() {
            "sym" => GroupSpec::Symmetric(num(arg)?),
            "alt" => GroupSpec::Alternating(num(arg)?),
            "dih" => GroupSpec::Dihedral(num(arg)?),
            "cyc" => GroupSpec::Cyclic(num(arg)?),
            "psl2" => GroupSpec::Psl2(num(arg)? as u32),
            "psl3" => GroupSpec::Psl3(num(arg)? as u32),
            "sl2" => GroupSpec::Sl2(num(arg)? as u32),
            "gl2" => GroupSpec::Gl2(num(arg)? as u32),
            "m11" if arg.is_none() => GroupSpec::M11,
            "klein" if arg.is_none() => GroupSpec::Klein,
            "symwr" => {
                let (a, b) = arg.ok_or_else(bad)?.split_once(',').ok_or_else(bad)?;
                GroupSpec::SymWrSym(num(Some(a))?, num(Some(b))?)
            }
            _ => return Err(bad()),
        };
        spec.validate()?;
        Ok(spec)
    }
}

/// Builds the catalog group and checks its order against the formula.
pub fn build(spec: &GroupSpec) -> Result<PermGroup> {
    spec.validate()?;
    let g = match *spec {
        GroupSpec::Symmetric(n) => symmetric(n),
        GroupSpec::Alternating(n) => alternating(n),
        GroupSpec::Dihedral(m) => dihedral(m),
        GroupSpec::Cyclic(m) => cyclic(m),
        GroupSpec::Psl2(q) => psl2(q as usize)?,
        GroupSpec::Psl3(q) => psl3(q as usize)?,
        GroupSpec::Sl2(q) => linear2(q as usize, false)?,
        GroupSpec::Gl2(q) => linear2(q as usize, true)?,
        GroupSpec::M11 => m11(),
        GroupSpec::Klein => klein(),
        GroupSpec::SymWrSym(a, b) => sym_wr_sym(a, b),
    };
    assert_eq!(g.order(), spec.classical_order(), "{spec} built with the wrong order");
    Ok(g)
}

/// `ε(q) = (-1)^((q-1)/2)` for odd `q`.
pub fn epsilon(q: u64) -> Result<i64> {
    if q.is_multiple_of(2) {
        return Err(GroupError::Unsupported(format!("epsilon of even q = {q}")));
    }
    Ok(if (q - 1).is_multiple_of(4) { 1 } else { -1 })
}

fn group(degree: usize, gens: Vec<Perm>) -> PermGroup {
    PermGroup::from_generators(gens, degree).expect("builder produces valid generators")
}

fn cycle(degree: usize, points: impl IntoIterator<Item = usize>) -> Perm {
    Perm::from_cycles(degree, &[points.into_iter().collect()]).unwrap()
}

pub fn symmetric(n: usize) -> PermGroup {
    if n < 2 {
        return PermGroup::trivial(1);
    }
    group(n, vec![cycle(n, [0, 1]), cycle(n, 0..n)])
}

pub fn alternating(n: usize) -> PermGroup {
    if n < 3 {
        return PermGroup::trivial(n.max(1));
    }
    let long = if n % 2 == 1 { cycle(n, 0..n) } else { cycle(n, 1..n) };
    group(n, vec![cycle(n, [0, 1, 2]), long])
}

/// Dihedral group of order `m` (even), acting on `m/2` points when `m ≥ 6`.
pub fn dihedral(m: usize) -> PermGroup {
    match m {
        2 => group(2, vec![cycle(2, [0, 1])]),
        4 => klein(),
        _ => {
            let n = m / 2;
            let reflection: Vec<usize> = (0..n).map(|i| (n - i) % n).collect();
            group(n, vec![cycle(n, 0..n), Perm::from_images(&reflection).unwrap()])
        }
    }
}

/// Cyclic group of order `m` on the minimal number of points.
pub fn cyclic(m: usize) -> PermGroup {
    let degree = cyclic_degree(m);
    if m == 1 {
        return PermGroup::trivial(1);
    }
    let mut cycles = Vec::new();
    let mut offset = 0;
    for &(p, e) in factorize(m as u64).iter() {
        let len = p.pow(e) as usize;
        cycles.push((offset..offset + len).collect());
        offset += len;
    }
    group(degree, vec![Perm::from_cycles(degree, &cycles).unwrap()])
}

pub fn klein() -> PermGroup {
    group(
        4,
        vec![
            Perm::parse("(0 1)(2 3)", Some(4)).unwrap(),
            Perm::parse("(0 2)(1 3)", Some(4)).unwrap(),
        ],
    )
}

pub fn m11() -> PermGroup {
    group(
        11,
        vec![cycle(11, 0..11), Perm::parse("(2 6 10 7)(3 9 4 5)", Some(11)).unwrap()],
    )
}

/// `Sym_a ≀ Sym_b` on `b` blocks of size `a`.
pub fn sym_wr_sym(a: usize, b: usize) -> PermGroup {
    let n = a * b;
    let mut gens = Vec::new();
    for g in symmetric(a).generators() {
        let images: Vec<usize> = (0..n).map(|x| if x < a { g.image(x) } else { x }).collect();
        gens.push(Perm::from_images(&images).unwrap());
    }
    for h in symmetric(b).generators() {
        let images: Vec<usize> = (0..n).map(|x| h.image(x / a) * a + x % a).collect();
        gens.push(Perm::from_images(&images).unwrap());
    }
    if n == 1 {
        return PermGroup::trivial(1);
    }
    group(n, gens)
}

/// `PSL₂(q)` on the `q + 1` points of the projective line (`∞ = q`),
/// generated by `x ↦ x + 1`, `x ↦ -1/x` and `x ↦ ω²x`.
pub fn psl2(q: usize) -> Result<PermGroup> {
    let f = FiniteField::new(q)?;
    let inf = q;
    let n = q + 1;
    let map = |phi: &dyn Fn(u8) -> usize| -> Perm {
        let images: Vec<usize> = (0..n)
            .map(|x| if x == inf { usize::MAX } else { phi(x as u8) })
            .collect();
        Perm::from_images(
            &images
                .iter()
                .map(|&y| if y == usize::MAX { inf } else { y })
                .collect::<Vec<_>>(),
        )
        .unwrap()
    };
    let translate = map(&|x| f.add(x, 1) as usize);
    let w2 = f.mul(f.primitive(), f.primitive());
    let scale = map(&|x| f.mul(w2, x) as usize);
    let invert = {
        let images: Vec<usize> = (0..n)
            .map(|x| {
                if x == inf {
                    0
                } else if x == 0 {
                    inf
                } else {
                    f.neg(f.inv(x as u8).unwrap()) as usize
                }
            })
            .collect();
        Perm::from_images(&images).unwrap()
    };
    Ok(group(n, vec![translate, invert, scale]))
}

type Vec3 = [u8; 3];

/// `PSL₃(q)` on the points of the projective plane, generated by the
/// elementary transvections.
pub fn psl3(q: usize) -> Result<PermGroup> {
    let f = FiniteField::new(q)?;
    if f.degree() != 1 {
        return Err(GroupError::Unsupported(format!("psl3 over F_{q}")));
    }
    let normalize = |v: Vec3| -> Vec3 {
        let lead = *v.iter().find(|&&c| c != 0).unwrap();
        let s = f.inv(lead).unwrap();
        [f.mul(s, v[0]), f.mul(s, v[1]), f.mul(s, v[2])]
    };
    let mut points: Vec<Vec3> = Vec::new();
    for a in 0..q as u8 {
        for b in 0..q as u8 {
            for c in 0..q as u8 {
                let v = [a, b, c];
                if v != [0, 0, 0] && normalize(v) == v {
                    points.push(v);
                }
            }
        }
    }
    let index = |v: Vec3| points.iter().position(|&w| w == v).unwrap();
    let mut gens = Vec::new();
    for i in 0..3 {
        for j in 0..3 {
            if i == j {
                continue;
            }
            // row i += row j acting on column vectors: v_i += v_j
            let images: Vec<usize> = points
                .iter()
                .map(|&v| {
                    let mut w = v;
                    w[i] = f.add(w[i], w[j]);
                    index(normalize(w))
                })
                .collect();
            gens.push(Perm::from_images(&images).unwrap());
        }
    }
    Ok(group(points.len(), gens))
}

/// Action of a 2×2 matrix `[[a, b], [c, d]]` on the nonzero vectors of
/// `F_q²`, point `(x, y)` having index `x·q + y − 1`.
fn matrix_on_vectors(f: &FiniteField, m: [u8; 4]) -> Perm {
    let q = f.order();
    let images: Vec<usize> = (1..q * q)
        .map(|v| {
            let (x, y) = ((v / q) as u8, (v % q) as u8);
            let nx = f.add(f.mul(m[0], x), f.mul(m[1], y)) as usize;
            let ny = f.add(f.mul(m[2], x), f.mul(m[3], y)) as usize;
            nx * q + ny - 1
        })
        .collect();
    Perm::from_images(&images).unwrap()
}

/// `SL₂(q)` or `GL₂(q)` on the `q² − 1` nonzero vectors.
pub fn linear2(q: usize, general: bool) -> Result<PermGroup> {
    let f = FiniteField::new(q)?;
    let w = f.primitive();
    let mut gens = Vec::new();
    for a in [1, w] {
        gens.push(matrix_on_vectors(&f, [1, a, 0, 1]));
        gens.push(matrix_on_vectors(&f, [1, 0, a, 1]));
    }
    if general {
        gens.push(matrix_on_vectors(&f, [w, 0, 0, 1]));
    }
    Ok(group(q * q - 1, gens))
}

/// Direct product acting on the disjoint union of the factors' points.
#[derive(Clone, Debug)]
pub struct DirectProduct {
    pub group: PermGroup,
    offsets: Vec<usize>,
}

impl DirectProduct {
    pub fn new(factors: &[PermGroup]) -> Result<DirectProduct> {
        let degree: usize = factors.iter().map(PermGroup::degree).sum();
        if degree > MAX_DEGREE {
            return Err(GroupError::DegreeOutOfRange(degree));
        }
        let mut offsets = Vec::new();
        let mut acc = 0;
        for f in factors {
            offsets.push(acc);
            acc += f.degree();
        }
        let mut product = DirectProduct {
            group: PermGroup::trivial(degree),
            offsets,
        };
        let gens = factors
            .iter()
            .enumerate()
            .flat_map(|(i, f)| f.generators().iter().map(|g| product.embed(i, g)).collect::<Vec<_>>())
            .collect();
        product.group = PermGroup::from_generators(gens, degree)?;
        Ok(product)
    }

    pub fn embed(&self, factor: usize, p: &Perm) -> Perm {
        let n = self.group.degree();
        let off = self.offsets[factor];
        let images: Vec<usize> = (0..n)
            .map(|x| {
                if x >= off && x < off + p.degree() {
                    off + p.image(x - off)
                } else {
                    x
                }
            })
            .collect();
        Perm::from_images(&images).unwrap()
    }

    pub fn embed_group(&self, factor: usize, h: &PermGroup) -> PermGroup {
        let gens = h.generators().iter().map(|g| self.embed(factor, g)).collect();
        PermGroup::from_generators(gens, self.group.degree()).unwrap()
    }
}

/// Groups used by the verification suites, smallest first.
pub fn catalog() -> Vec<GroupSpec> {
    use GroupSpec::*;
    let mut specs = vec![
        Klein,
        Symmetric(3),
        Symmetric(4),
        Symmetric(5),
        Symmetric(6),
        Symmetric(7),
        Symmetric(8),
        Alternating(4),
        Alternating(5),
        Alternating(6),
        Alternating(7),
        Alternating(8),
        Dihedral(8),
        Dihedral(10),
        Dihedral(12),
        Dihedral(18),
        Dihedral(24),
        Cyclic(6),
        Cyclic(12),
        Psl3(2),
        Psl3(3),
        M11,
        SymWrSym(2, 2),
        SymWrSym(3, 2),
        SymWrSym(2, 3),
        SymWrSym(4, 2),
    ];
    specs.extend(PSL2_ORDERS.iter().map(|&q| Psl2(q)));
    specs.extend(SL2_ORDERS.iter().map(|&q| Sl2(q)));
    specs.extend(SL2_ORDERS.iter().map(|&q| Gl2(q)));
    specs.sort_by_key(|s| (s.classical_order(), *s));
    specs
}

/// The nonabelian simple groups of the catalog.
pub fn simple_catalog() -> Vec<GroupSpec> {
    catalog().into_iter().filter(GroupSpec::is_simple_nonabelian).collect()
}
