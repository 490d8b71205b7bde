//! Permutations of `{0, …, n-1}` stored as image arrays.
//!
//! Products follow the right-action convention used throughout the crate:
//! `a * b` applies `a` first, then `b`, so `x^(ab) = (x^a)^b`, and the
//! conjugate `h^g` is `g⁻¹ * h * g`.

use std::fmt;
use std::ops::Mul;

use crate::error::{GroupError, Result};

/// Largest supported degree; points are stored as `u8`.
pub const MAX_DEGREE: usize = 255;

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Perm {
    images: Box<[u8]>,
}

fn check_degree(degree: usize) -> Result<()> {
    if degree == 0 || degree > MAX_DEGREE {
        Err(GroupError::DegreeOutOfRange(degree))
    } else {
        Ok(())
    }
}

impl Perm {
    pub fn identity(degree: usize) -> Perm {
        assert!((1..=MAX_DEGREE).contains(&degree), "degree {degree} out of range");
        Perm {
            images: (0..degree).map(|i| i as u8).collect(),
        }
    }

    /// Builds a permutation from its image list, checking it is a bijection.
    pub fn from_images(images: &[usize]) -> Result<Perm> {
        check_degree(images.len())?;
        let mut seen = vec![false; images.len()];
        for &x in images {
            if x >= images.len() || seen[x] {
                return Err(GroupError::NotABijection(images.len()));
            }
            seen[x] = true;
        }
        Ok(Perm {
            images: images.iter().map(|&x| x as u8).collect(),
        })
    }

    /// Builds a permutation from disjoint (or overlapping, composed left to
    /// right) cycles.
    pub fn from_cycles(degree: usize, cycles: &[Vec<usize>]) -> Result<Perm> {
        check_degree(degree)?;
        let mut acc = Perm::identity(degree);
        for cycle in cycles {
            let mut images: Vec<usize> = (0..degree).collect();
            for (i, &x) in cycle.iter().enumerate() {
                if x >= degree {
                    return Err(GroupError::PermParse {
                        text: format!("{cycle:?}"),
                        reason: format!("point {x} exceeds degree {degree}"),
                    });
                }
                images[x] = cycle[(i + 1) % cycle.len()];
            }
            let c = Perm::from_images(&images).map_err(|_| GroupError::PermParse {
                text: format!("{cycle:?}"),
                reason: "repeated point in cycle".into(),
            })?;
            acc = &acc * &c;
        }
        Ok(acc)
    }

    /// Parses disjoint-cycle text such as `"(0 1 2)(3 4)"` or `"()"`.
    ///
    /// Points may be separated by spaces or commas. When `degree` is `None`
    /// the degree is one more than the largest point mentioned.
    pub fn parse(text: &str, degree: Option<usize>) -> Result<Perm> {
        let err = |reason: &str| GroupError::PermParse {
            text: text.to_string(),
            reason: reason.to_string(),
        };
        let mut cycles: Vec<Vec<usize>> = Vec::new();
        let mut rest = text.trim();
        while !rest.is_empty() {
            let body_start = rest.strip_prefix('(').ok_or_else(|| err("expected '('"))?;
            let close = body_start.find(')').ok_or_else(|| err("unclosed cycle"))?;
            let body = &body_start[..close];
            let cycle = body
                .split(|c: char| c.is_whitespace() || c == ',')
                .filter(|s| !s.is_empty())
                .map(|s| s.parse::<usize>().map_err(|_| err("bad point")))
                .collect::<Result<Vec<_>>>()?;
            let mut sorted = cycle.clone();
            sorted.sort_unstable();
            if sorted.windows(2).any(|w| w[0] == w[1]) {
                return Err(err("repeated point in cycle"));
            }
            if !cycle.is_empty() {
                cycles.push(cycle);
            }
            rest = body_start[close + 1..].trim_start();
        }
        let max_point = cycles.iter().flatten().copied().max();
        let degree = match (degree, max_point) {
            (Some(d), _) => d,
            (None, Some(m)) => m + 1,
            (None, None) => 1,
        };
        Perm::from_cycles(degree, &cycles)
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    #[inline]
    pub fn image(&self, x: usize) -> usize {
        self.images[x] as usize
    }

    pub fn images(&self) -> &[u8] {
        &self.images
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &x)| i == x as usize)
    }

    pub fn inverse(&self) -> Perm {
        let mut inv = vec![0u8; self.images.len()];
        for (i, &x) in self.images.iter().enumerate() {
            inv[x as usize] = i as u8;
        }
        Perm {
            images: inv.into_boxed_slice(),
        }
    }

    /// `self` followed by `other`.
    #[inline]
    pub fn then(&self, other: &Perm) -> Perm {
        debug_assert_eq!(self.degree(), other.degree());
        Perm {
            images: self.images.iter().map(|&x| other.images[x as usize]).collect(),
        }
    }

    /// `g⁻¹ * self * g`.
    pub fn conjugate_by(&self, g: &Perm) -> Perm {
        // x^(g⁻¹ h g): send x^g to (x^h)^g.
        let mut images = vec![0u8; self.images.len()];
        for (x, &hx) in self.images.iter().enumerate() {
            images[g.images[x] as usize] = g.images[hx as usize];
        }
        Perm {
            images: images.into_boxed_slice(),
        }
    }

    pub fn pow(&self, mut e: u64) -> Perm {
        let mut base = self.clone();
        let mut acc = Perm::identity(self.degree());
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        acc
    }

    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let n = self.degree();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] || self.image(start) == start {
                continue;
            }
            let mut cycle = vec![start];
            seen[start] = true;
            let mut x = self.image(start);
            while x != start {
                seen[x] = true;
                cycle.push(x);
                x = self.image(x);
            }
            out.push(cycle);
        }
        out
    }

    /// Order of the permutation (lcm of cycle lengths).
    pub fn order(&self) -> u64 {
        self.cycles().iter().fold(1u64, |acc, c| lcm(acc, c.len() as u64))
    }

    pub fn first_moved(&self) -> Option<usize> {
        (0..self.degree()).find(|&i| self.image(i) != i)
    }

    pub fn commutes_with(&self, other: &Perm) -> bool {
        self.images
            .iter()
            .enumerate()
            .all(|(x, &a)| other.images[a as usize] == self.images[other.images[x] as usize])
    }

    /// Commutator `a⁻¹ b⁻¹ a b`.
    pub fn commutator(a: &Perm, b: &Perm) -> Perm {
        &(&a.inverse() * &b.inverse()) * &(a * b)
    }
}

pub(crate) fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

pub(crate) fn lcm(a: u64, b: u64) -> u64 {
    a / gcd(a, b) * b
}

impl Mul for &Perm {
    type Output = Perm;
    fn mul(self, rhs: &Perm) -> Perm {
        self.then(rhs)
    }
}

impl Mul for Perm {
    type Output = Perm;
    fn mul(self, rhs: Perm) -> Perm {
        self.then(&rhs)
    }
}

impl fmt::Display for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return f.write_str("()");
        }
        for c in cycles {
            f.write_str("(")?;
            for (i, x) in c.iter().enumerate() {
                if i > 0 {
                    f.write_str(" ")?;
                }
                write!(f, "{x}")?;
            }
            f.write_str(")")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}
