//! Stabilizer chains built by randomized Schreier–Sims followed by a
//! deterministic Schreier-generator verification pass, so the resulting
//! order and membership test are exact.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::perm::Perm;

#[derive(Clone, Debug)]
struct Level {
    base: usize,
    gens: Vec<Perm>,
    orbit: Vec<usize>,
    /// `transversal[x]` maps the base point to `x`.
    transversal: Vec<Option<Perm>>,
    inverse: Vec<Option<Perm>>,
}

impl Level {
    fn new(base: usize, degree: usize) -> Level {
        let mut level = Level {
            base,
            gens: Vec::new(),
            orbit: Vec::new(),
            transversal: vec![None; degree],
            inverse: vec![None; degree],
        };
        level.rebuild(degree);
        level
    }

    fn rebuild(&mut self, degree: usize) {
        self.transversal.iter_mut().for_each(|t| *t = None);
        self.inverse.iter_mut().for_each(|t| *t = None);
        self.orbit.clear();
        self.transversal[self.base] = Some(Perm::identity(degree));
        self.orbit.push(self.base);
        let mut i = 0;
        while i < self.orbit.len() {
            let y = self.orbit[i];
            for s in &self.gens {
                let z = s.image(y);
                if self.transversal[z].is_none() {
                    let u = self.transversal[y].as_ref().unwrap() * s;
                    self.transversal[z] = Some(u);
                    self.orbit.push(z);
                }
            }
            i += 1;
        }
        for &x in &self.orbit {
            self.inverse[x] = Some(self.transversal[x].as_ref().unwrap().inverse());
        }
    }
}

/// Base and strong generating set with explicit transversals.
#[derive(Clone, Debug)]
pub(crate) struct StabChain {
    degree: usize,
    levels: Vec<Level>,
}

const RANDOM_SUCCESS_RUN: usize = 12;
const PRODUCT_SLOTS: usize = 10;

impl StabChain {
    pub(crate) fn build(degree: usize, gens: &[Perm], seed: u64) -> StabChain {
        let gens: Vec<Perm> = gens.iter().filter(|g| !g.is_identity()).cloned().collect();
        let mut chain = StabChain {
            degree,
            levels: Vec::new(),
        };
        if gens.is_empty() {
            return chain;
        }
        let mut level0 = Level::new(gens[0].first_moved().unwrap(), degree);
        level0.gens = gens.clone();
        level0.rebuild(degree);
        chain.levels.push(level0);
        chain.random_phase(&gens, seed);
        chain.verify();
        chain
    }

    pub(crate) fn order(&self) -> u64 {
        self.levels.iter().fold(1u64, |acc, l| {
            acc.checked_mul(l.orbit.len() as u64)
                .expect("group order exceeds 64 bits")
        })
    }

    pub(crate) fn base(&self) -> Vec<usize> {
        self.levels.iter().map(|l| l.base).collect()
    }

    /// Sifts `g` through levels `start..`; returns the residue and the level
    /// at which sifting stopped (`levels.len()` when it passed all levels).
    fn sift_from(&self, g: &Perm, start: usize) -> (Perm, usize) {
        let mut h = g.clone();
        for (i, level) in self.levels.iter().enumerate().skip(start) {
            let x = h.image(level.base);
            match &level.inverse[x] {
                Some(u_inv) => h = &h * u_inv,
                None => return (h, i),
            }
        }
        (h, self.levels.len())
    }

    pub(crate) fn contains(&self, g: &Perm) -> bool {
        if g.degree() != self.degree {
            return false;
        }
        self.sift_from(g, 0).0.is_identity()
    }

    /// Adds `r` (which fixes the base points of levels `< from`) as a strong
    /// generator to levels `from..=to`, appending a level if needed.
    fn add_strong(&mut self, r: Perm, from: usize, to: usize) {
        if to == self.levels.len() {
            let base = r.first_moved().expect("residue is not the identity");
            self.levels.push(Level::new(base, self.degree));
        }
        for level in &mut self.levels[from..=to] {
            level.gens.push(r.clone());
            level.rebuild(self.degree);
        }
    }

    fn random_phase(&mut self, gens: &[Perm], seed: u64) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut slots: Vec<Perm> = gens
            .iter()
            .cycle()
            .take(PRODUCT_SLOTS.max(gens.len()))
            .cloned()
            .collect();
        let mut acc = Perm::identity(self.degree);
        let mut next = |rng: &mut ChaCha8Rng| {
            let n = slots.len();
            let i = rng.gen_range(0..n);
            let mut j = rng.gen_range(0..n - 1);
            if j >= i {
                j += 1;
            }
            slots[i] = if rng.gen_bool(0.5) {
                &slots[i] * &slots[j]
            } else {
                &slots[j] * &slots[i]
            };
            acc = &acc * &slots[i];
            acc.clone()
        };
        for _ in 0..40 {
            next(&mut rng);
        }
        let mut run = 0;
        let mut budget = 2000;
        while run < RANDOM_SUCCESS_RUN && budget > 0 {
            budget -= 1;
            let g = next(&mut rng);
            let (r, j) = self.sift_from(&g, 0);
            if r.is_identity() {
                run += 1;
            } else {
                run = 0;
                self.add_strong(r, 1.min(j), j);
            }
        }
    }

    /// Deterministic Schreier–Sims closure: every Schreier generator of
    /// every level sifts to the identity through the levels below it.
    fn verify(&mut self) {
        let mut i = self.levels.len() as isize - 1;
        while i >= 0 {
            let li = i as usize;
            match self.failing_schreier_generator(li) {
                Some((r, j)) => {
                    self.add_strong(r, li + 1, j);
                    i = j as isize;
                }
                None => i -= 1,
            }
        }
    }

    fn failing_schreier_generator(&self, li: usize) -> Option<(Perm, usize)> {
        let level = &self.levels[li];
        for &x in &level.orbit {
            let u_x = level.transversal[x].as_ref().unwrap();
            for s in &level.gens {
                let y = s.image(x);
                let u_y_inv = level.inverse[y].as_ref().unwrap();
                let h = &(u_x * s) * u_y_inv;
                if h.is_identity() {
                    continue;
                }
                let (r, j) = self.sift_from(&h, li + 1);
                if !r.is_identity() {
                    return Some((r, j));
                }
            }
        }
        None
    }

    /// All elements, in a deterministic order.
    pub(crate) fn elements(&self) -> Vec<Perm> {
        let mut elems = vec![Perm::identity(self.degree)];
        for level in self.levels.iter().rev() {
            let mut next = Vec::with_capacity(elems.len() * level.orbit.len());
            for e in &elems {
                for &x in &level.orbit {
                    next.push(e * level.transversal[x].as_ref().unwrap());
                }
            }
            elems = next;
        }
        elems
    }

    pub(crate) fn strong_generators(&self) -> Vec<Perm> {
        let mut out: Vec<Perm> = Vec::new();
        for level in &self.levels {
            for g in &level.gens {
                if !out.contains(g) {
                    out.push(g.clone());
                }
            }
        }
        out
    }

    /// A uniformly distributed element, read off the transversals.
    pub(crate) fn random_element<R: Rng>(&self, rng: &mut R) -> Perm {
        let mut g = Perm::identity(self.degree);
        for level in self.levels.iter().rev() {
            let x = level.orbit[rng.gen_range(0..level.orbit.len())];
            g = &g * level.transversal[x].as_ref().unwrap();
        }
        g
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str, n: usize) -> Perm {
        Perm::parse(s, Some(n)).unwrap()
    }

    #[test]
    fn symmetric_orders() {
        for n in 2..=8usize {
            let gens = vec![p("(0 1)", n), Perm::from_cycles(n, &[(0..n).collect()]).unwrap()];
            let chain = StabChain::build(n, &gens, 7);
            assert_eq!(chain.order(), (1..=n as u64).product::<u64>());
        }
    }

    #[test]
    fn order_independent_of_seed() {
        let gens = vec![p("(0 1 2 3 4 5 6 7 8 9 10)", 11), p("(2 6 10 7)(3 9 4 5)", 11)];
        for seed in 0..5 {
            assert_eq!(StabChain::build(11, &gens, seed).order(), 7920);
        }
    }

    #[test]
    fn elements_are_distinct_members() {
        let gens = vec![p("(0 1 2)", 4), p("(1 2 3)", 4)];
        let chain = StabChain::build(4, &gens, 1);
        let elems = chain.elements();
        assert_eq!(elems.len(), 12);
        let set: std::collections::HashSet<_> = elems.iter().cloned().collect();
        assert_eq!(set.len(), 12);
        assert!(elems.iter().all(|e| chain.contains(e)));
        assert!(!chain.contains(&p("(0 1)", 4)));
    }
}
