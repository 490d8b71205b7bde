//! Explicit element enumeration of a group, with element-level closures.
//!
//! Subgroups of an enumerated group are handled as sorted index sets
//! ([`ElemSet`]), which gives exact, canonical subgroup identity for the
//! lattice and seeded Hall searches.

use std::sync::OnceLock;

use rustc_hash::FxHashMap;

use crate::perm::Perm;

/// Largest group for which a full multiplication table is cached.
pub const MUL_TABLE_LIMIT: usize = 4096;

pub struct ElementTable {
    degree: usize,
    elems: Vec<Perm>,
    index: FxHashMap<Perm, u32>,
    inverse: Vec<u32>,
    gens: Vec<u32>,
    mul: OnceLock<Vec<u16>>,
    conj: OnceLock<Vec<Vec<u32>>>,
}

/// A subgroup given by the sorted indices of its elements.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ElemSet(Box<[u32]>);

impl ElemSet {
    pub fn from_sorted(v: Vec<u32>) -> ElemSet {
        debug_assert!(v.windows(2).all(|w| w[0] < w[1]));
        ElemSet(v.into_boxed_slice())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, i: u32) -> bool {
        self.0.binary_search(&i).is_ok()
    }

    pub fn indices(&self) -> &[u32] {
        &self.0
    }

    pub fn is_subset(&self, other: &ElemSet) -> bool {
        if self.len() > other.len() {
            return false;
        }
        let (mut i, mut j) = (0, 0);
        let (a, b) = (&self.0, &other.0);
        while i < a.len() {
            if j == b.len() {
                return false;
            }
            match a[i].cmp(&b[j]) {
                std::cmp::Ordering::Equal => {
                    i += 1;
                    j += 1;
                }
                std::cmp::Ordering::Greater => j += 1,
                std::cmp::Ordering::Less => return false,
            }
        }
        true
    }

    pub fn intersection_len(&self, other: &ElemSet) -> usize {
        let (mut i, mut j, mut n) = (0, 0, 0);
        let (a, b) = (&self.0, &other.0);
        while i < a.len() && j < b.len() {
            match a[i].cmp(&b[j]) {
                std::cmp::Ordering::Equal => {
                    n += 1;
                    i += 1;
                    j += 1;
                }
                std::cmp::Ordering::Less => i += 1,
                std::cmp::Ordering::Greater => j += 1,
            }
        }
        n
    }
}

struct BitSet(Vec<u64>);

impl BitSet {
    fn new(n: usize) -> BitSet {
        BitSet(vec![0; n.div_ceil(64)])
    }
    #[inline]
    fn insert(&mut self, i: u32) -> bool {
        let (w, b) = ((i >> 6) as usize, i & 63);
        let fresh = self.0[w] & (1 << b) == 0;
        self.0[w] |= 1 << b;
        fresh
    }
}

impl ElementTable {
    /// Builds the table from a complete element list containing the identity.
    pub(crate) fn new(degree: usize, mut elems: Vec<Perm>, generators: &[Perm]) -> ElementTable {
        let id = Perm::identity(degree);
        if let Some(pos) = elems.iter().position(|e| *e == id) {
            elems.swap(0, pos);
        }
        let mut index = FxHashMap::default();
        index.reserve(elems.len());
        for (i, e) in elems.iter().enumerate() {
            index.insert(e.clone(), i as u32);
        }
        let inverse = elems.iter().map(|e| index[&e.inverse()]).collect();
        let gens = generators
            .iter()
            .filter(|g| !g.is_identity())
            .map(|g| index[g])
            .collect();
        ElementTable {
            degree,
            elems,
            index,
            inverse,
            gens,
            mul: OnceLock::new(),
            conj: OnceLock::new(),
        }
    }

    pub fn len(&self) -> usize {
        self.elems.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elems.is_empty()
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn elements(&self) -> &[Perm] {
        &self.elems
    }

    pub fn element(&self, i: u32) -> &Perm {
        &self.elems[i as usize]
    }

    pub fn index_of(&self, p: &Perm) -> Option<u32> {
        self.index.get(p).copied()
    }

    /// Indices of the group's defining generators.
    pub fn generator_indices(&self) -> &[u32] {
        &self.gens
    }

    pub fn inverse(&self, i: u32) -> u32 {
        self.inverse[i as usize]
    }

    fn mul_table(&self) -> Option<&Vec<u16>> {
        let n = self.elems.len();
        if n > MUL_TABLE_LIMIT {
            return None;
        }
        Some(self.mul.get_or_init(|| {
            let mut t = Vec::with_capacity(n * n);
            for a in &self.elems {
                for b in &self.elems {
                    t.push(self.index[&(a * b)] as u16);
                }
            }
            t
        }))
    }

    #[inline]
    pub fn mul(&self, a: u32, b: u32) -> u32 {
        match self.mul.get() {
            Some(t) => t[a as usize * self.elems.len() + b as usize] as u32,
            None => self.index[&(&self.elems[a as usize] * &self.elems[b as usize])],
        }
    }

    /// Forces the multiplication table when the group is small enough.
    pub fn prepare_mul_table(&self) {
        let _ = self.mul_table();
    }

    /// `g⁻¹ x g` on indices.
    pub fn conj(&self, x: u32, g: u32) -> u32 {
        self.mul(self.mul(self.inverse(g), x), g)
    }

    fn conj_maps(&self) -> &Vec<Vec<u32>> {
        self.conj.get_or_init(|| {
            self.gens
                .iter()
                .map(|&g| {
                    let gi = &self.elems[g as usize];
                    self.elems.iter().map(|x| self.index[&x.conjugate_by(gi)]).collect()
                })
                .collect()
        })
    }

    /// Elements of `⟨gens⟩`; `None` as soon as the closure exceeds `limit`.
    pub fn closure(&self, gens: &[u32], limit: Option<usize>) -> Option<ElemSet> {
        let gens: Vec<u32> = gens.iter().copied().filter(|&g| g != 0).collect();
        let mut seen = BitSet::new(self.elems.len());
        seen.insert(0);
        let mut list = vec![0u32];
        let mut i = 0;
        while i < list.len() {
            let e = list[i];
            for &s in &gens {
                let x = self.mul(e, s);
                if seen.insert(x) {
                    list.push(x);
                    if limit.is_some_and(|l| list.len() > l) {
                        return None;
                    }
                }
            }
            i += 1;
        }
        list.sort_unstable();
        Some(ElemSet::from_sorted(list))
    }

    pub fn conjugate_set(&self, set: &ElemSet, g: u32) -> ElemSet {
        let mut v: Vec<u32> = set.indices().iter().map(|&x| self.conj(x, g)).collect();
        v.sort_unstable();
        ElemSet::from_sorted(v)
    }

    /// All conjugates of a subgroup under the whole group (orbit under the
    /// generators' conjugation action), starting with `set` itself.
    pub fn conjugacy_orbit(&self, set: &ElemSet) -> Vec<ElemSet> {
        let maps = self.conj_maps();
        let mut orbit = vec![set.clone()];
        let mut seen: rustc_hash::FxHashSet<ElemSet> = [set.clone()].into_iter().collect();
        let mut i = 0;
        while i < orbit.len() {
            for m in maps {
                let mut v: Vec<u32> = orbit[i].indices().iter().map(|&x| m[x as usize]).collect();
                v.sort_unstable();
                let c = ElemSet::from_sorted(v);
                if seen.insert(c.clone()) {
                    orbit.push(c);
                }
            }
            i += 1;
        }
        orbit
    }

    /// Like [`ElementTable::conjugacy_orbit`], carrying along the conjugates
    /// of a generating set of `set`.
    pub fn conjugacy_orbit_with_generators(&self, set: &ElemSet, gens: &[u32]) -> Vec<(ElemSet, Vec<u32>)> {
        let maps = self.conj_maps();
        let mut orbit = vec![(set.clone(), gens.to_vec())];
        let mut seen: rustc_hash::FxHashSet<ElemSet> = [set.clone()].into_iter().collect();
        let mut i = 0;
        while i < orbit.len() {
            for m in maps {
                let mut v: Vec<u32> = orbit[i].0.indices().iter().map(|&x| m[x as usize]).collect();
                v.sort_unstable();
                let c = ElemSet::from_sorted(v);
                if seen.insert(c.clone()) {
                    let g = orbit[i].1.iter().map(|&x| m[x as usize]).collect();
                    orbit.push((c, g));
                }
            }
            i += 1;
        }
        orbit
    }

    /// Conjugacy classes of elements; each class lists its indices with the
    /// smallest index first.
    pub fn conjugacy_classes(&self) -> Vec<Vec<u32>> {
        let maps = self.conj_maps();
        let n = self.elems.len();
        let mut done = vec![false; n];
        let mut classes = Vec::new();
        for start in 0..n as u32 {
            if done[start as usize] {
                continue;
            }
            done[start as usize] = true;
            let mut class = vec![start];
            let mut i = 0;
            while i < class.len() {
                for m in maps {
                    let y = m[class[i] as usize];
                    if !done[y as usize] {
                        done[y as usize] = true;
                        class.push(y);
                    }
                }
                i += 1;
            }
            classes.push(class);
        }
        classes
    }

    pub fn element_order(&self, i: u32) -> u64 {
        self.elems[i as usize].order()
    }

    /// Removes generators that already lie in the closure of earlier ones.
    pub fn reduce_generators(&self, gens: &[u32]) -> Vec<u32> {
        let mut kept: Vec<u32> = Vec::new();
        let mut current = self.closure(&[], None).unwrap();
        for &g in gens {
            if !current.contains(g) {
                kept.push(g);
                current = self.closure(&kept, None).unwrap();
            }
        }
        kept
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    #[test]
    fn closure_and_orbits_in_sym4() {
        let g = crate::atlas::symmetric(4);
        let t = g.element_table().unwrap();
        assert_eq!(t.len(), 24);
        let c = t.index_of(&Perm::parse("(0 1 2 3)", Some(4)).unwrap()).unwrap();
        let cyc = t.closure(&[c], None).unwrap();
        assert_eq!(cyc.len(), 4);
        // three cyclic subgroups of order 4
        assert_eq!(t.conjugacy_orbit(&cyc).len(), 3);
        assert_eq!(t.conjugacy_classes().len(), 5);
        assert!(t.closure(t.generator_indices(), Some(10)).is_none());
    }

    #[test]
    fn subset_and_intersection() {
        let a = ElemSet::from_sorted(vec![0, 2, 5]);
        let b = ElemSet::from_sorted(vec![0, 1, 2, 5, 9]);
        assert!(a.is_subset(&b));
        assert!(!b.is_subset(&a));
        assert_eq!(a.intersection_len(&b), 3);
    }
}
