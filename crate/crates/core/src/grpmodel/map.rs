use super::{Elem, FiniteGroup, GroupError, Subgroup};

/// Domains up to this order are additionally checked on every pair.
pub const EXHAUSTIVE_HOM_CHECK: usize = 2000;

/// Map between finite groups given on every element.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GroupMap {
    images: Vec<Elem>,
}

impl GroupMap {
    pub fn from_images(images: Vec<Elem>) -> Self {
        GroupMap { images }
    }

    pub fn identity(g: &FiniteGroup) -> Self {
        GroupMap { images: (0..g.order() as Elem).collect() }
    }

    pub fn from_fn(g: &FiniteGroup, f: impl Fn(Elem) -> Elem) -> Self {
        GroupMap { images: (0..g.order() as Elem).map(f).collect() }
    }

    #[inline]
    pub fn apply(&self, x: Elem) -> Elem {
        self.images[x as usize]
    }

    pub fn images(&self) -> &[Elem] {
        &self.images
    }

    /// `self ∘ other`
    pub fn compose(&self, other: &GroupMap) -> GroupMap {
        GroupMap { images: other.images.iter().map(|&x| self.images[x as usize]).collect() }
    }

    pub fn is_bijective(&self) -> bool {
        let mut seen = vec![false; self.images.len()];
        for &y in &self.images {
            if y as usize >= seen.len() || seen[y as usize] {
                return false;
            }
            seen[y as usize] = true;
        }
        true
    }

    pub fn inverse(&self) -> Option<GroupMap> {
        if !self.is_bijective() {
            return None;
        }
        let mut inv = vec![0; self.images.len()];
        for (x, &y) in self.images.iter().enumerate() {
            inv[y as usize] = x as Elem;
        }
        Some(GroupMap { images: inv })
    }

    /// Exact homomorphism test: f(1) = 1 and f(x·g) = f(x)·f(g) for every x
    /// and every generator g, which forces f(xy) = f(x)f(y) by induction
    /// on the word length of y. Small domains are also checked on all pairs.
    pub fn is_homomorphism(&self, dom: &FiniteGroup, cod: &FiniteGroup) -> bool {
        if self.images.len() != dom.order() || self.images.iter().any(|&y| y as usize >= cod.order()) {
            return false;
        }
        if self.apply(0) != 0 {
            return false;
        }
        let ok = |x: Elem, y: Elem| cod.mul(self.apply(x), self.apply(y)) == self.apply(dom.mul(x, y));
        let n = dom.order() as Elem;
        if !(0..n).all(|x| dom.generators().iter().all(|&g| ok(x, g))) {
            return false;
        }
        if dom.order() <= EXHAUSTIVE_HOM_CHECK {
            return (0..n).all(|x| (0..n).all(|y| ok(x, y)));
        }
        true
    }

    /// The generator-wise part of [`GroupMap::is_homomorphism`] alone; still
    /// exact, without the all-pairs pass.
    pub fn respects_generators(&self, dom: &FiniteGroup, cod: &FiniteGroup) -> bool {
        self.images.len() == dom.order()
            && self.apply(0) == 0
            && (0..dom.order() as Elem).all(|x| {
                dom.generators().iter().all(|&g| cod.mul(self.apply(x), self.apply(g)) == self.apply(dom.mul(x, g)))
            })
    }

    pub fn is_automorphism(&self, g: &FiniteGroup) -> bool {
        self.is_bijective() && self.is_homomorphism(g, g)
    }

    /// Order as a permutation of the domain (for automorphisms).
    pub fn order(&self) -> usize {
        let mut cur = self.clone();
        let mut k = 1;
        while cur.images.iter().enumerate().any(|(i, &y)| i as Elem != y) {
            cur = cur.compose(self);
            k += 1;
        }
        k
    }

    pub fn pow(&self, e: usize) -> GroupMap {
        let mut acc = GroupMap { images: (0..self.images.len() as Elem).collect() };
        for _ in 0..e {
            acc = acc.compose(self);
        }
        acc
    }
}

/// Breadth-first Cayley words: for each element, its parent and the
/// generator index with `elem = parent · gens[gen]`.
#[derive(Clone, Debug)]
pub struct CayleyWords {
    pub parent: Vec<Elem>,
    pub gen: Vec<u32>,
    /// Elements in BFS order, identity first.
    pub order: Vec<Elem>,
}

pub fn cayley_words(g: &FiniteGroup, gens: &[Elem]) -> Result<CayleyWords, GroupError> {
    let n = g.order();
    let mut parent = vec![Elem::MAX; n];
    let mut gen = vec![u32::MAX; n];
    parent[0] = 0;
    let mut order = vec![0];
    let mut head = 0;
    while head < order.len() {
        let x = order[head];
        for (i, &s) in gens.iter().enumerate() {
            let y = g.mul(x, s);
            if parent[y as usize] == Elem::MAX {
                parent[y as usize] = x;
                gen[y as usize] = i as u32;
                order.push(y);
            }
        }
        head += 1;
    }
    if order.len() != n {
        return Err(GroupError::DoesNotGenerate { reached: order.len(), order: n });
    }
    Ok(CayleyWords { parent, gen, order })
}

/// Extends generator images to a map on all of `dom` along Cayley words,
/// then verifies it is a homomorphism.
pub fn extend_map(
    dom: &FiniteGroup,
    cod: &FiniteGroup,
    gens: &[Elem],
    images: &[Elem],
) -> Result<GroupMap, GroupError> {
    if gens.len() != images.len() {
        return Err(GroupError::NotHomomorphism("generator and image counts differ".into()));
    }
    let words = cayley_words(dom, gens)?;
    let mut out = vec![0; dom.order()];
    for &x in words.order.iter().skip(1) {
        let p = words.parent[x as usize];
        out[x as usize] = cod.mul(out[p as usize], images[words.gen[x as usize] as usize]);
    }
    let map = GroupMap::from_images(out);
    if !map.is_homomorphism(dom, cod) {
        return Err(GroupError::NotHomomorphism("generator images violate a relation".into()));
    }
    Ok(map)
}

/// {g : f(g) = g}
pub fn fix_subgroup(g: &FiniteGroup, f: &GroupMap) -> Subgroup {
    Subgroup::from_mask((0..g.order() as Elem).map(|x| f.apply(x) == x).collect())
}
