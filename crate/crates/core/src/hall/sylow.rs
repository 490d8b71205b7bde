//! Sylow subgroups by ascent through normalizers.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::{GroupError, Result};
use crate::group::{order_modulo, PermGroup};
use crate::pi::{is_prime, pi_part, PiSet};

/// A Sylow `p`-subgroup of `g`; trivial when `p` does not divide `|g|`.
///
/// Starts from the `p`-part of a seeded random element and repeatedly adds
/// an element of order `p` modulo the current subgroup that normalizes it.
pub fn sylow(g: &PermGroup, p: u64) -> Result<PermGroup> {
    if !is_prime(p) {
        return Err(GroupError::NotPrime(p));
    }
    let target = pi_part(g.order(), &PiSet::new([p])?);
    let mut s = PermGroup::from_generators(Vec::new(), g.degree())?;
    if target == 1 {
        return Ok(s);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(g.seed() ^ p);
    for _ in 0..8 {
        let x = g.random_element(&mut rng);
        let o = x.order();
        let p_part = pi_part(o, &PiSet::new([p])?);
        if p_part > 1 {
            s = s.closure_with(&[x.pow(o / p_part)]);
            break;
        }
    }
    let table = g.element_table()?;
    while s.order() < target {
        let next = table.elements().iter().find_map(|x| {
            if s.contains(x) {
                return None;
            }
            let o = order_modulo(x, &s);
            if !o.is_multiple_of(p) {
                return None;
            }
            let z = x.pow(o / p);
            s.normalized_by(&z).then_some(z)
        });
        let z = next.expect("a p-subgroup below the Sylow order has a larger normalizing p-overgroup");
        s = s.closure_with(&[z]);
    }
    Ok(s)
}
