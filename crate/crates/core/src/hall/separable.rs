//! π-separability and Sylow towers, both read off from normal π-cores.

use crate::error::Result;
use crate::group::PermGroup;
use crate::pi::{pi_part, prime_set, PiSet};

/// `O_π(G)`: the largest normal π-subgroup.
pub fn pi_core(g: &PermGroup, pi: &PiSet) -> Result<PermGroup> {
    let trivial = PermGroup::from_generators(Vec::new(), g.degree())?;
    g.normal_core_mod(&trivial, &|p| pi.contains(p))
}

#[derive(Clone, Debug)]
pub struct Separability {
    pub separable: bool,
    /// Normal series `1 = G_0 < G_1 < … < G_k` whose factors alternate
    /// between π- and π′-groups. Ends at `G` exactly when `separable`.
    pub series: Vec<PermGroup>,
}

/// Builds the upper π-series `1 ≤ O_π ≤ O_{π,π′} ≤ …` and reports whether
/// it reaches `G`.
pub fn is_pi_separable(g: &PermGroup, pi: &PiSet) -> Result<Separability> {
    let order = g.order();
    let mut current = PermGroup::from_generators(Vec::new(), g.degree())?;
    let mut series = vec![current.clone()];
    let mut want_pi = true;
    let mut stalled = 0;
    while current.order() < order {
        let next = g.normal_core_mod(&current, &|p| pi.contains(p) == want_pi)?;
        if next.order() > current.order() {
            series.push(next.clone());
            current = next;
            stalled = 0;
        } else {
            stalled += 1;
            if stalled == 2 {
                return Ok(Separability {
                    separable: false,
                    series,
                });
            }
        }
        want_pi = !want_pi;
    }
    Ok(Separability {
        separable: true,
        series,
    })
}

/// Ordered primes `(p₁, …, p_n)` of a Sylow tower `H = H_0 > H_1 > … > H_n = 1`
/// with `H_{i−1}/H_i` isomorphic to a Sylow `p_i`-subgroup, or `None`.
///
/// Works upward: the bottom `T` of the tower must be a normal Hall
/// `T`-subgroup, so it equals `O_T(H)` and is detected by its order.
pub fn sylow_complexion(h: &PermGroup) -> Result<Option<Vec<u64>>> {
    let primes: Vec<u64> = prime_set(h.order())?.primes().collect();
    let mut bottom_up = Vec::new();
    if extend(h, &primes, &mut bottom_up)? {
        bottom_up.reverse();
        Ok(Some(bottom_up))
    } else {
        Ok(None)
    }
}

fn extend(h: &PermGroup, primes: &[u64], chosen: &mut Vec<u64>) -> Result<bool> {
    if chosen.len() == primes.len() {
        return Ok(true);
    }
    for &p in primes {
        if chosen.contains(&p) {
            continue;
        }
        chosen.push(p);
        let t = PiSet::new(chosen.iter().copied())?;
        if pi_core(h, &t)?.order() == pi_part(h.order(), &t) && extend(h, primes, chosen)? {
            return Ok(true);
        }
        chosen.pop();
    }
    Ok(false)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::atlas::{alternating, symmetric};

    fn pi(s: &str) -> PiSet {
        s.parse().unwrap()
    }

    #[test]
    fn separability_examples() {
        let s4 = is_pi_separable(&symmetric(4), &pi("2")).unwrap();
        assert!(s4.separable);
        assert_eq!(s4.series.last().unwrap().order(), 24);
        assert!(!is_pi_separable(&alternating(5), &pi("2,3")).unwrap().separable);
        let whole = is_pi_separable(&alternating(5), &pi("2,3,5")).unwrap();
        assert!(whole.separable);
        assert_eq!(whole.series.len(), 2);
        assert!(!is_pi_separable(&symmetric(5), &pi("2")).unwrap().separable);
    }

    #[test]
    fn complexions() {
        assert_eq!(sylow_complexion(&symmetric(3)).unwrap(), Some(vec![2, 3]));
        assert_eq!(sylow_complexion(&alternating(4)).unwrap(), Some(vec![3, 2]));
        assert_eq!(sylow_complexion(&alternating(5)).unwrap(), None);
        assert_eq!(sylow_complexion(&symmetric(4)).unwrap(), None);
        assert_eq!(sylow_complexion(&PermGroup::trivial(2)).unwrap(), Some(vec![]));
    }
}
