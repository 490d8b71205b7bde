//! Permutation groups: construction, order, membership and the classical
//! subgroup constructions (closures, conjugates, normalizers, centralizers,
//! derived and lower central series, solvable radical).

use std::fmt;
use std::sync::{Arc, OnceLock};

use rand::Rng;

use crate::chain::StabChain;
use crate::elements::ElementTable;
use crate::error::{GroupError, Result};
use crate::perm::{lcm, Perm, MAX_DEGREE};

/// Seed used for the randomized Schreier–Sims phase unless overridden.
pub const DEFAULT_SEED: u64 = 0x6a09_e667_f3bc_c908;

/// Largest group whose elements will be enumerated explicitly.
pub const ELEMENT_LIMIT: u64 = 500_000;

struct Inner {
    degree: usize,
    gens: Vec<Perm>,
    seed: u64,
    chain: OnceLock<StabChain>,
    table: OnceLock<Arc<ElementTable>>,
}

/// A permutation group given by generators. The stabilizer chain and the
/// element table are built on first use and shared between clones.
#[derive(Clone)]
pub struct PermGroup {
    inner: Arc<Inner>,
}

impl PermGroup {
    /// `group_from_generators`: identity generators are dropped.
    pub fn from_generators(gens: Vec<Perm>, degree: usize) -> Result<PermGroup> {
        if degree == 0 || degree > MAX_DEGREE {
            return Err(GroupError::DegreeOutOfRange(degree));
        }
        if let Some(g) = gens.iter().find(|g| g.degree() != degree) {
            return Err(GroupError::DegreeMismatch {
                expected: degree,
                found: g.degree(),
            });
        }
        Ok(PermGroup::from_parts(degree, gens, DEFAULT_SEED))
    }

    fn from_parts(degree: usize, gens: Vec<Perm>, seed: u64) -> PermGroup {
        let mut unique: Vec<Perm> = Vec::with_capacity(gens.len());
        for g in gens {
            if !g.is_identity() && !unique.contains(&g) {
                unique.push(g);
            }
        }
        PermGroup {
            inner: Arc::new(Inner {
                degree,
                gens: unique,
                seed,
                chain: OnceLock::new(),
                table: OnceLock::new(),
            }),
        }
    }

    /// Same generators, different Schreier–Sims seed.
    pub fn with_seed(&self, seed: u64) -> PermGroup {
        PermGroup::from_parts(self.degree(), self.inner.gens.clone(), seed)
    }

    /// A group on the same points with different generators (same seed).
    pub(crate) fn sibling(&self, gens: Vec<Perm>) -> PermGroup {
        PermGroup::from_parts(self.degree(), gens, self.inner.seed)
    }

    pub fn trivial(degree: usize) -> PermGroup {
        PermGroup::from_parts(degree, Vec::new(), DEFAULT_SEED)
    }

    pub fn seed(&self) -> u64 {
        self.inner.seed
    }

    pub fn degree(&self) -> usize {
        self.inner.degree
    }

    pub fn generators(&self) -> &[Perm] {
        &self.inner.gens
    }

    pub fn identity(&self) -> Perm {
        Perm::identity(self.degree())
    }

    fn chain(&self) -> &StabChain {
        self.inner
            .chain
            .get_or_init(|| StabChain::build(self.degree(), &self.inner.gens, self.inner.seed))
    }

    pub fn order(&self) -> u64 {
        self.chain().order()
    }

    pub fn base(&self) -> Vec<usize> {
        self.chain().base()
    }

    pub fn strong_generators(&self) -> Vec<Perm> {
        self.chain().strong_generators()
    }

    pub fn is_trivial(&self) -> bool {
        self.inner.gens.is_empty()
    }

    /// Membership by sifting; a permutation of another degree is never a member.
    pub fn contains(&self, p: &Perm) -> bool {
        self.chain().contains(p)
    }

    /// Membership that reports a degree mismatch as an error.
    pub fn member(&self, p: &Perm) -> Result<bool> {
        if p.degree() != self.degree() {
            return Err(GroupError::DegreeMismatch {
                expected: self.degree(),
                found: p.degree(),
            });
        }
        Ok(self.contains(p))
    }

    pub fn random_element<R: Rng>(&self, rng: &mut R) -> Perm {
        self.chain().random_element(rng)
    }

    pub fn element_table(&self) -> Result<Arc<ElementTable>> {
        if let Some(t) = self.inner.table.get() {
            return Ok(t.clone());
        }
        let order = self.order();
        if order > ELEMENT_LIMIT {
            return Err(GroupError::TooLarge {
                order,
                limit: ELEMENT_LIMIT,
                operation: "element enumeration",
            });
        }
        Ok(self
            .inner
            .table
            .get_or_init(|| {
                Arc::new(ElementTable::new(
                    self.degree(),
                    self.chain().elements(),
                    &self.inner.gens,
                ))
            })
            .clone())
    }

    pub fn elements(&self) -> Result<Vec<Perm>> {
        Ok(self.element_table()?.elements().to_vec())
    }

    pub fn is_subgroup_of(&self, g: &PermGroup) -> bool {
        self.degree() == g.degree() && self.generators().iter().all(|x| g.contains(x))
    }

    /// Equality as sets of permutations.
    pub fn same_subgroup(&self, other: &PermGroup) -> bool {
        self.degree() == other.degree()
            && self.order() == other.order()
            && self.generators().iter().all(|x| other.contains(x))
    }

    /// `subgroup_closure`: the subgroup generated by `self` and the extra
    /// generators.
    pub fn closure_with(&self, extra: &[Perm]) -> PermGroup {
        let mut gens = self.inner.gens.clone();
        gens.extend(extra.iter().filter(|g| !self.contains(g)).cloned());
        if gens.len() == self.inner.gens.len() {
            return self.clone();
        }
        self.sibling(gens)
    }

    /// `⟨self, other⟩`.
    pub fn join(&self, other: &PermGroup) -> PermGroup {
        self.closure_with(other.generators())
    }

    /// `H^g`, generated by the conjugated generators.
    pub fn conjugate(&self, g: &Perm) -> PermGroup {
        self.sibling(self.inner.gens.iter().map(|h| h.conjugate_by(g)).collect())
    }

    /// True when `g` maps this subgroup onto itself.
    pub fn normalized_by(&self, g: &Perm) -> bool {
        self.inner.gens.iter().all(|h| self.contains(&h.conjugate_by(g)))
    }

    /// Orbits on points, each sorted, ordered by smallest point.
    pub fn orbits(&self) -> Vec<Vec<usize>> {
        let n = self.degree();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            seen[start] = true;
            let mut orbit = vec![start];
            let mut i = 0;
            while i < orbit.len() {
                for g in self.generators() {
                    let y = g.image(orbit[i]);
                    if !seen[y] {
                        seen[y] = true;
                        orbit.push(y);
                    }
                }
                i += 1;
            }
            orbit.sort_unstable();
            out.push(orbit);
        }
        out
    }

    fn orbit_labels(&self) -> (Vec<usize>, Vec<usize>) {
        let orbits = self.orbits();
        let mut label = vec![0; self.degree()];
        let sizes = orbits.iter().map(Vec::len).collect();
        for (k, o) in orbits.iter().enumerate() {
            for &x in o {
                label[x] = k;
            }
        }
        (label, sizes)
    }

    fn require_subgroup(&self, h: &PermGroup, what: &'static str) -> Result<()> {
        if h.is_subgroup_of(self) {
            Ok(())
        } else {
            Err(GroupError::NotContained { what })
        }
    }

    pub fn is_normal(&self, h: &PermGroup) -> Result<bool> {
        self.require_subgroup(h, "subgroup")?;
        Ok(self.generators().iter().all(|g| h.normalized_by(g)))
    }

    /// `N_G(H)` by a scan of the elements of `G`, skipping elements that do
    /// not permute the orbits of `H` among themselves.
    pub fn normalizer(&self, h: &PermGroup) -> Result<PermGroup> {
        self.require_subgroup(h, "subgroup")?;
        if self.generators().iter().all(|g| h.normalized_by(g)) {
            return Ok(self.clone());
        }
        let table = self.element_table()?;
        let (label, sizes) = h.orbit_labels();
        let mut image_of = vec![usize::MAX; sizes.len()];
        let mut n = h.clone();
        let target = self.order();
        for g in table.elements() {
            if n.order() == target {
                break;
            }
            if n.contains(g) || !permutes_blocks(g, &label, &sizes, &mut image_of) {
                continue;
            }
            if h.normalized_by(g) {
                n = n.closure_with(std::slice::from_ref(g));
            }
        }
        Ok(n)
    }

    /// `C_G(H)` by a scan of the elements of `G`.
    pub fn centralizer(&self, h: &PermGroup) -> Result<PermGroup> {
        self.require_subgroup(h, "subgroup")?;
        let table = self.element_table()?;
        let mut c = self.sibling(Vec::new());
        for g in table.elements() {
            if c.contains(g) {
                continue;
            }
            if h.generators().iter().all(|x| x.commutes_with(g)) {
                c = c.closure_with(std::slice::from_ref(g));
            }
        }
        Ok(c)
    }

    pub fn center(&self) -> Result<PermGroup> {
        self.centralizer(self)
    }

    /// Smallest normal subgroup of `self` containing `gens`.
    pub fn normal_closure(&self, gens: &[Perm]) -> PermGroup {
        let mut n = self.sibling(gens.to_vec());
        let mut queue: Vec<Perm> = n.generators().to_vec();
        while let Some(x) = queue.pop() {
            for g in self.generators() {
                let c = x.conjugate_by(g);
                if !n.contains(&c) {
                    n = n.closure_with(std::slice::from_ref(&c));
                    queue.push(c);
                }
            }
        }
        n
    }

    /// `[N, self]` for a normal subgroup `N` of `self`.
    pub fn commutator_with(&self, n: &PermGroup) -> PermGroup {
        let mut comms = Vec::new();
        for a in n.generators() {
            for b in self.generators() {
                let c = Perm::commutator(a, b);
                if !c.is_identity() && !comms.contains(&c) {
                    comms.push(c);
                }
            }
        }
        self.normal_closure(&comms)
    }

    pub fn derived_subgroup(&self) -> PermGroup {
        let mut comms = Vec::new();
        let gens = self.generators();
        for (i, a) in gens.iter().enumerate() {
            for b in &gens[i + 1..] {
                let c = Perm::commutator(a, b);
                if !c.is_identity() && !comms.contains(&c) {
                    comms.push(c);
                }
            }
        }
        self.normal_closure(&comms)
    }

    pub fn is_abelian(&self) -> bool {
        let gens = self.generators();
        gens.iter()
            .enumerate()
            .all(|(i, a)| gens[i + 1..].iter().all(|b| a.commutes_with(b)))
    }

    pub fn is_solvable(&self) -> bool {
        let mut d = self.clone();
        loop {
            if d.is_trivial() || d.order() == 1 {
                return true;
            }
            let next = d.derived_subgroup();
            if next.order() == d.order() {
                return false;
            }
            d = next;
        }
    }

    pub fn is_nilpotent(&self) -> bool {
        let mut l = self.clone();
        loop {
            if l.order() == 1 {
                return true;
            }
            let next = self.commutator_with(&l);
            if next.order() == l.order() {
                return false;
            }
            l = next;
        }
    }

    /// Largest normal solvable subgroup, grown from normal closures of
    /// elements of prime order modulo the part found so far.
    pub fn solvable_radical(&self) -> Result<PermGroup> {
        let table = self.element_table()?;
        let classes = table.conjugacy_classes();
        let mut r = self.sibling(Vec::new());
        loop {
            let mut grew = false;
            for class in &classes {
                let x = table.element(class[0]);
                if r.contains(x) {
                    continue;
                }
                let Some(p) = prime_order_modulo(x, &r) else {
                    continue;
                };
                debug_assert!(crate::pi::is_prime(p));
                let mut gens = r.generators().to_vec();
                gens.push(x.clone());
                let m = self.normal_closure(&gens);
                if m.is_solvable() {
                    r = m;
                    grew = true;
                }
            }
            if !grew {
                return Ok(r);
            }
        }
    }

    /// Largest normal subgroup `N ⊇ K` of `self` such that `|N : K|` has all
    /// prime factors accepted by `allowed`. `K` must be normal in `self`.
    pub fn normal_core_mod(&self, k: &PermGroup, allowed: &dyn Fn(u64) -> bool) -> Result<PermGroup> {
        let table = self.element_table()?;
        let k_order = k.order();
        let mut n = k.clone();
        for class in table.conjugacy_classes() {
            let x = table.element(class[0]);
            if n.contains(x) {
                continue;
            }
            let o = order_modulo(x, k);
            if !crate::pi::factorize(o).iter().all(|&(p, _)| allowed(p)) {
                continue;
            }
            let mut gens = k.generators().to_vec();
            gens.push(x.clone());
            let m = self.normal_closure(&gens);
            let index = m.order() / k_order;
            if crate::pi::factorize(index).iter().all(|&(p, _)| allowed(p)) {
                n = n.join(&m);
            }
        }
        Ok(n)
    }

    /// Intersection with another group of the same degree.
    pub fn intersection(&self, other: &PermGroup) -> Result<PermGroup> {
        let (small, big) = if self.order() <= other.order() {
            (self, other)
        } else {
            (other, self)
        };
        let mut out = self.sibling(Vec::new());
        for x in small.element_table()?.elements() {
            if big.contains(x) && !out.contains(x) {
                out = out.closure_with(std::slice::from_ref(x));
            }
        }
        Ok(out)
    }

    /// Representatives of the right cosets `K g` of `K` in `self`.
    pub fn right_transversal(&self, k: &PermGroup) -> Result<Vec<Perm>> {
        self.require_subgroup(k, "coset subgroup")?;
        let table = self.element_table()?;
        let k_elems = k.elements()?;
        let mut seen = vec![false; table.len()];
        let mut reps = Vec::with_capacity(table.len() / k_elems.len());
        for (i, g) in table.elements().iter().enumerate() {
            if seen[i] {
                continue;
            }
            reps.push(g.clone());
            for x in &k_elems {
                seen[table.index_of(&(x * g)).unwrap() as usize] = true;
            }
        }
        Ok(reps)
    }

    /// Least common multiple of element orders.
    pub fn exponent(&self) -> Result<u64> {
        let table = self.element_table()?;
        Ok(table
            .conjugacy_classes()
            .iter()
            .fold(1, |acc, c| lcm(acc, table.element_order(c[0]))))
    }

    /// True when no subgroup lies strictly between `h` and `self`.
    pub fn is_maximal(&self, h: &PermGroup) -> Result<bool> {
        self.require_subgroup(h, "subgroup")?;
        let order = self.order();
        if h.order() == order {
            return Ok(false);
        }
        for g in self.right_transversal(h)? {
            if h.contains(&g) {
                continue;
            }
            if h.closure_with(std::slice::from_ref(&g)).order() != order {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Subnormality: the series of successive normal closures of `h`
    /// terminates at `h`.
    pub fn is_subnormal(&self, h: &PermGroup) -> Result<bool> {
        self.require_subgroup(h, "subgroup")?;
        let mut k = self.clone();
        loop {
            let next = k.normal_closure(h.generators());
            if next.order() == h.order() {
                return Ok(true);
            }
            if next.order() == k.order() {
                return Ok(false);
            }
            k = next;
        }
    }
}

/// Does `g` map every block of the labelled partition onto a block of the
/// same size?
fn permutes_blocks(g: &Perm, label: &[usize], sizes: &[usize], image_of: &mut [usize]) -> bool {
    image_of.iter_mut().for_each(|x| *x = usize::MAX);
    for (x, &l) in label.iter().enumerate() {
        let target = label[g.image(x)];
        if image_of[l] == usize::MAX {
            if sizes[l] != sizes[target] {
                return false;
            }
            image_of[l] = target;
        } else if image_of[l] != target {
            return false;
        }
    }
    true
}

/// Smallest `k` with `x^k ∈ K`.
pub(crate) fn order_modulo(x: &Perm, k: &PermGroup) -> u64 {
    let o = x.order();
    crate::pi::divisors(o)
        .into_iter()
        .find(|&d| k.contains(&x.pow(d)))
        .unwrap_or(o)
}

fn prime_order_modulo(x: &Perm, k: &PermGroup) -> Option<u64> {
    let o = order_modulo(x, k);
    crate::pi::is_prime(o).then_some(o)
}

impl fmt::Debug for PermGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "PermGroup(degree {}, order {}, [", self.degree(), self.order())?;
        for (i, g) in self.generators().iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{g}")?;
        }
        f.write_str("])")
    }
}
