//! Prime sets and π-parts of integers.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use crate::error::{GroupError, Result};
use crate::group::PermGroup;

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// `(prime, exponent)` pairs sorted by prime; empty for 1.
pub fn factorize(mut n: u64) -> Factorization {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            let mut e = 0;
            while n.is_multiple_of(d) {
                n /= d;
                e += 1;
            }
            out.push((d, e));
        }
        d += 1;
    }
    if n > 1 {
        out.push((n, 1));
    }
    Factorization(out)
}

/// Prime factorization of a positive integer.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Factorization(Vec<(u64, u32)>);

impl Factorization {
    pub fn iter(&self) -> std::slice::Iter<'_, (u64, u32)> {
        self.0.iter()
    }

    pub fn value(&self) -> u64 {
        self.0.iter().map(|&(p, e)| p.pow(e)).product()
    }
}

/// All divisors in increasing order.
pub fn divisors(n: u64) -> Vec<u64> {
    let mut out = vec![1u64];
    for &(p, e) in factorize(n).iter() {
        let len = out.len();
        let mut pk = 1;
        for _ in 0..e {
            pk *= p;
            for i in 0..len {
                out.push(out[i] * pk);
            }
        }
    }
    out.sort_unstable();
    out
}

/// A finite set of primes. The complement `π′` is never materialised; use
/// [`PiSet::contains`] negated.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PiSet {
    primes: BTreeSet<u64>,
}

impl PiSet {
    pub fn empty() -> PiSet {
        PiSet::default()
    }

    pub fn new<I: IntoIterator<Item = u64>>(primes: I) -> Result<PiSet> {
        let mut set = BTreeSet::new();
        for p in primes {
            if !is_prime(p) {
                return Err(GroupError::NotPrime(p));
            }
            set.insert(p);
        }
        Ok(PiSet { primes: set })
    }

    pub fn contains(&self, p: u64) -> bool {
        self.primes.contains(&p)
    }

    pub fn primes(&self) -> impl Iterator<Item = u64> + '_ {
        self.primes.iter().copied()
    }

    pub fn len(&self) -> usize {
        self.primes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.primes.is_empty()
    }

    pub fn is_subset(&self, other: &PiSet) -> bool {
        self.primes.is_subset(&other.primes)
    }

    pub fn union(&self, other: &PiSet) -> PiSet {
        PiSet {
            primes: self.primes.union(&other.primes).copied().collect(),
        }
    }

    pub fn intersection(&self, other: &PiSet) -> PiSet {
        PiSet {
            primes: self.primes.intersection(&other.primes).copied().collect(),
        }
    }

    pub fn difference(&self, other: &PiSet) -> PiSet {
        PiSet {
            primes: self.primes.difference(&other.primes).copied().collect(),
        }
    }

    /// True iff every prime divisor of `n` lies in the set.
    pub fn is_pi_number(&self, n: u64) -> bool {
        factorize(n).iter().all(|&(p, _)| self.contains(p))
    }

    /// All subsets, smallest first.
    pub fn subsets(&self) -> Vec<PiSet> {
        let ps: Vec<u64> = self.primes().collect();
        let mut out: Vec<PiSet> = (0..1u32 << ps.len())
            .map(|mask| PiSet {
                primes: ps
                    .iter()
                    .enumerate()
                    .filter(|(i, _)| mask & (1 << i) != 0)
                    .map(|(_, &p)| p)
                    .collect(),
            })
            .collect();
        out.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
        out
    }
}

impl FromStr for PiSet {
    type Err = GroupError;

    /// Comma-separated primes, e.g. `"2,3,5"`; the empty string is `∅`.
    fn from_str(s: &str) -> Result<PiSet> {
        let err = |reason: &str| GroupError::PiParse {
            text: s.to_string(),
            reason: reason.to_string(),
        };
        let mut primes = Vec::new();
        for part in s.split(',').map(str::trim).filter(|t| !t.is_empty()) {
            let p: u64 = part.parse().map_err(|_| err("not an integer"))?;
            if !is_prime(p) {
                return Err(err(&format!("{p} is not prime")));
            }
            primes.push(p);
        }
        PiSet::new(primes)
    }
}

impl fmt::Display for PiSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.primes().map(|p| p.to_string()).collect();
        write!(f, "{{{}}}", parts.join(","))
    }
}

/// `π(n)`: the prime divisors of `n`.
pub fn prime_set(n: u64) -> Result<PiSet> {
    if n == 0 {
        return Err(GroupError::Zero);
    }
    Ok(PiSet {
        primes: factorize(n).iter().map(|&(p, _)| p).collect(),
    })
}

/// `n_π`: the largest divisor of `n` whose prime factors all lie in `pi`.
pub fn pi_part(n: u64, pi: &PiSet) -> u64 {
    factorize(n)
        .iter()
        .filter(|&&(p, _)| pi.contains(p))
        .map(|&(p, e)| p.pow(e))
        .product()
}

pub fn is_pi_group(g: &PermGroup, pi: &PiSet) -> bool {
    pi.is_pi_number(g.order())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::atlas::{alternating, symmetric};
    use proptest::prelude::*;

    fn pi(s: &str) -> PiSet {
        s.parse().unwrap()
    }

    #[test]
    fn prime_set_examples() {
        assert!(prime_set(1).unwrap().is_empty());
        assert_eq!(prime_set(5040).unwrap(), pi("2,3,5,7"));
        assert_eq!(prime_set(7920).unwrap(), pi("2,3,5,11"));
        assert_eq!(prime_set(0), Err(GroupError::Zero));
    }

    #[test]
    fn pi_part_examples() {
        assert_eq!(pi_part(120, &pi("2,3")), 24);
        assert_eq!(pi_part(48, &pi("2,3")), 48);
        assert_eq!(pi_part(168, &pi("2,3")), 24);
        assert_eq!(pi_part(12345, &PiSet::empty()), 1);
    }

    #[test]
    fn pi_group_examples() {
        assert!(is_pi_group(&PermGroup::trivial(3), &PiSet::empty()));
        assert!(is_pi_group(&symmetric(4), &pi("2,3")));
        assert!(!is_pi_group(&alternating(5), &pi("2,3")));
    }

    #[test]
    fn parsing() {
        assert_eq!(pi("2, 3 ,5").to_string(), "{2,3,5}");
        assert_eq!(pi(""), PiSet::empty());
        assert!("2,4".parse::<PiSet>().is_err());
        assert!("2,x".parse::<PiSet>().is_err());
        assert_eq!(PiSet::new([4]), Err(GroupError::NotPrime(4)));
    }

    #[test]
    fn divisor_list() {
        assert_eq!(divisors(12), vec![1, 2, 3, 4, 6, 12]);
        assert_eq!(divisors(1), vec![1]);
    }

    fn small_pi() -> impl Strategy<Value = PiSet> {
        proptest::sample::subsequence(vec![2u64, 3, 5, 7, 11, 13], 0..=6).prop_map(|v| PiSet::new(v).unwrap())
    }

    proptest! {
        #[test]
        fn pi_part_splits_n(n in 1u64..200_000, pi in small_pi()) {
            let primes = prime_set(n).unwrap();
            let complement = primes.difference(&pi);
            prop_assert_eq!(pi_part(n, &pi) * pi_part(n, &complement), n);
        }

        #[test]
        fn pi_part_multiplicative(a in 1u64..2000, b in 1u64..2000, pi in small_pi()) {
            prop_assume!(crate::perm::gcd(a, b) == 1);
            prop_assert_eq!(pi_part(a * b, &pi), pi_part(a, &pi) * pi_part(b, &pi));
        }

        #[test]
        fn prime_set_of_product(a in 1u64..5000, b in 1u64..5000) {
            let lhs = prime_set(a * b).unwrap();
            let rhs = prime_set(a).unwrap().union(&prime_set(b).unwrap());
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn factorization_round_trips(n in 1u64..1_000_000) {
            prop_assert_eq!(factorize(n).value(), n);
        }
    }
}
