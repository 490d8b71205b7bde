//! Homomorphisms between permutation groups and quotients by normal
//! subgroups (as the action on right cosets).

use std::sync::OnceLock;

use rustc_hash::FxHashMap;

use crate::error::{GroupError, Result};
use crate::group::PermGroup;
use crate::perm::{Perm, MAX_DEGREE};

/// A homomorphism given by the images of the source generators. The full
/// element map is built on first use by a breadth-first walk of the Cayley
/// graph, which also proves that the rule is well defined.
pub struct Homomorphism {
    source: PermGroup,
    target: PermGroup,
    images: Vec<Perm>,
    map: OnceLock<FxHashMap<Perm, Perm>>,
}

impl Homomorphism {
    /// Checks that the generator images extend to a homomorphism.
    pub fn from_images(source: &PermGroup, target: &PermGroup, images: Vec<Perm>) -> Result<Homomorphism> {
        if images.len() != source.generators().len() {
            return Err(GroupError::NotAHomomorphism);
        }
        if let Some(bad) = images.iter().find(|y| y.degree() != target.degree()) {
            return Err(GroupError::DegreeMismatch {
                expected: target.degree(),
                found: bad.degree(),
            });
        }
        if !images.iter().all(|y| target.contains(y)) {
            return Err(GroupError::NotContained {
                what: "generator image",
            });
        }
        let hom = Homomorphism {
            source: source.clone(),
            target: target.clone(),
            images,
            map: OnceLock::new(),
        };
        let map = hom.walk()?;
        let _ = hom.map.set(map);
        Ok(hom)
    }

    fn walk(&self) -> Result<FxHashMap<Perm, Perm>> {
        let order = self.source.order();
        let mut map = FxHashMap::default();
        map.reserve(order as usize);
        let id = self.source.identity();
        map.insert(id.clone(), self.target.identity());
        let mut queue = vec![id];
        let mut i = 0;
        while i < queue.len() {
            let x = queue[i].clone();
            let fx = map[&x].clone();
            for (s, t) in self.source.generators().iter().zip(&self.images) {
                let y = &x * s;
                let fy = &fx * t;
                match map.get(&y) {
                    Some(known) if *known != fy => return Err(GroupError::NotAHomomorphism),
                    Some(_) => {}
                    None => {
                        map.insert(y.clone(), fy);
                        queue.push(y);
                    }
                }
            }
            i += 1;
        }
        Ok(map)
    }

    fn element_map(&self) -> &FxHashMap<Perm, Perm> {
        self.map
            .get_or_init(|| self.walk().expect("homomorphism was validated"))
    }

    pub fn source(&self) -> &PermGroup {
        &self.source
    }

    pub fn target(&self) -> &PermGroup {
        &self.target
    }

    pub fn generator_images(&self) -> &[Perm] {
        &self.images
    }

    pub fn apply(&self, x: &Perm) -> Result<Perm> {
        self.element_map()
            .get(x)
            .cloned()
            .ok_or(GroupError::NotContained { what: "element" })
    }

    /// Image of a subgroup of the source, generated by the generator images.
    pub fn image(&self, h: &PermGroup) -> Result<PermGroup> {
        let gens = h
            .generators()
            .iter()
            .map(|x| self.apply(x))
            .collect::<Result<Vec<_>>>()?;
        PermGroup::from_generators(gens, self.target.degree())
    }

    pub fn kernel(&self) -> PermGroup {
        let gens: Vec<Perm> = self
            .element_map()
            .iter()
            .filter(|(_, y)| y.is_identity())
            .map(|(x, _)| x.clone())
            .collect();
        reduced(&self.source, gens)
    }

    /// Full preimage of a subgroup of the target: the kernel together with
    /// one preimage of each generator.
    pub fn preimage(&self, k: &PermGroup) -> Result<PermGroup> {
        let map = self.element_map();
        let mut gens = self.kernel().generators().to_vec();
        for y in k.generators() {
            let x = map
                .iter()
                .find(|(_, fx)| *fx == y)
                .map(|(x, _)| x.clone())
                .ok_or(GroupError::NotContained {
                    what: "preimage generator",
                })?;
            gens.push(x);
        }
        Ok(reduced(&self.source, gens))
    }
}

/// Subgroup of `g` generated by `gens`, keeping only the generators that
/// enlarge the group.
fn reduced(g: &PermGroup, mut gens: Vec<Perm>) -> PermGroup {
    gens.sort();
    let mut h = PermGroup::from_generators(Vec::new(), g.degree()).unwrap();
    for x in gens {
        if !h.contains(&x) {
            h = h.closure_with(std::slice::from_ref(&x));
        }
    }
    h
}

/// `G / A` as the permutation action of `G` on the right cosets of `A`.
pub fn quotient_by_normal(g: &PermGroup, a: &PermGroup) -> Result<(PermGroup, Homomorphism)> {
    if !g.is_normal(a)? {
        return Err(GroupError::NotNormal);
    }
    let index = (g.order() / a.order()) as usize;
    if index > MAX_DEGREE {
        return Err(GroupError::DegreeOutOfRange(index));
    }
    let reps = g.right_transversal(a)?;
    let table = g.element_table()?;
    let mut coset_of = vec![usize::MAX; table.len()];
    let a_elems = a.elements()?;
    for (i, t) in reps.iter().enumerate() {
        for x in &a_elems {
            coset_of[table.index_of(&(x * t)).unwrap() as usize] = i;
        }
    }
    let act = |s: &Perm| -> Perm {
        let images: Vec<usize> = reps
            .iter()
            .map(|t| coset_of[table.index_of(&(t * s)).unwrap() as usize])
            .collect();
        Perm::from_images(&images).unwrap()
    };
    let images: Vec<Perm> = g.generators().iter().map(act).collect();
    let quotient = PermGroup::from_generators(images.clone(), index)?;
    let hom = Homomorphism {
        source: g.clone(),
        target: quotient.clone(),
        images,
        map: OnceLock::new(),
    };
    Ok((quotient, hom))
}
