use std::collections::HashMap;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::chain::StabChain;
use super::{PermError, Permutation};

/// Element enumeration refuses groups larger than this.
pub const ENUMERATION_CAP: u128 = 1_000_000;

/// Largest index accepted by [`PermGroup::coset_action`].
pub const COSET_INDEX_CAP: u128 = 10_000;

/// Generator lists longer than this are first replaced by random subproducts.
const REDUCE_ABOVE: usize = 8;
const RANDOM_GENERATORS: usize = 6;

/// Permutation group with a complete stabiliser chain.
#[derive(Clone, Debug)]
pub struct PermGroup {
    degree: usize,
    gens: Vec<Permutation>,
    chain: StabChain,
}

impl PermGroup {
    pub fn trivial(degree: usize) -> Self {
        PermGroup { degree, gens: Vec::new(), chain: StabChain::trivial(degree) }
    }

    /// The group generated by `gens`.
    ///
    /// Long generator lists are replaced by a few random subproducts; the
    /// chain of that subgroup is then extended by every original generator
    /// that does not sift, so the result is always exact.
    pub fn closure(degree: usize, gens: &[Permutation]) -> Result<Self, PermError> {
        for g in gens {
            if g.degree() != degree {
                return Err(PermError::DegreeMismatch { expected: degree, got: g.degree() });
            }
        }
        let mut uniq: Vec<Permutation> = gens.iter().filter(|g| !g.is_identity()).cloned().collect();
        uniq.sort();
        uniq.dedup();
        let mut group = PermGroup::trivial(degree);
        if uniq.len() > REDUCE_ABOVE {
            let mut rng = ChaCha8Rng::seed_from_u64(0x5eed ^ (degree as u64) << 20 ^ uniq.len() as u64);
            for _ in 0..RANDOM_GENERATORS {
                let mut g = Permutation::identity(degree);
                for s in &uniq {
                    if rng.gen_bool(0.5) {
                        g = g.compose(s);
                    }
                }
                group.push_generator(g);
            }
        }
        for g in &uniq {
            group.push_generator(g.clone());
        }
        Ok(group)
    }

    /// Subgroup generated by a set of elements, picking generators greedily.
    pub fn from_elements(degree: usize, elements: &[Permutation]) -> Self {
        let mut group = PermGroup::trivial(degree);
        for e in elements {
            group.push_generator(e.clone());
        }
        group
    }

    /// Adds `g` as a generator unless it is already a member.
    pub fn push_generator(&mut self, g: Permutation) {
        if self.chain.contains(&g) {
            return;
        }
        self.chain.add_generator(&g);
        self.gens.push(g);
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    /// A generating set; never contains the identity.
    pub fn gens(&self) -> &[Permutation] {
        &self.gens
    }

    pub fn order(&self) -> u128 {
        self.chain.order()
    }

    pub fn is_trivial(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn contains(&self, g: &Permutation) -> bool {
        g.degree() == self.degree && self.chain.contains(g)
    }

    pub fn base(&self) -> Vec<usize> {
        self.chain.levels.iter().map(|l| l.base).collect()
    }

    pub fn is_subgroup_of(&self, other: &PermGroup) -> bool {
        self.gens.iter().all(|g| other.contains(g))
    }

    pub fn same_as(&self, other: &PermGroup) -> bool {
        self.order() == other.order() && self.is_subgroup_of(other)
    }

    pub fn is_abelian(&self) -> bool {
        self.gens.iter().enumerate().all(|(i, a)| self.gens[i + 1..].iter().all(|b| a.compose(b) == b.compose(a)))
    }

    pub fn random_element(&self, rng: &mut impl Rng) -> Permutation {
        let idx: Vec<usize> = self.chain.levels.iter().map(|l| rng.gen_range(0..l.orbit.len())).collect();
        self.chain.element_from_indices(&idx)
    }

    /// Every element, ordered by the stabiliser chain.
    pub fn elements(&self) -> Result<Vec<Permutation>, PermError> {
        let order = self.order();
        if order > ENUMERATION_CAP {
            return Err(PermError::Capacity { order, cap: ENUMERATION_CAP });
        }
        let mut out = vec![Permutation::identity(self.degree)];
        for lvl in self.chain.levels.iter().rev() {
            let mut next = Vec::with_capacity(out.len() * lvl.orbit.len());
            for u in lvl.reps() {
                for g in &out {
                    next.push(u.compose(g));
                }
            }
            out = next;
        }
        Ok(out)
    }

    /// Orbit partition of the point set, each orbit sorted, orbits ordered by
    /// least point.
    pub fn orbits(&self) -> Vec<Vec<usize>> {
        orbits_of(self.degree, &self.gens)
    }

    pub fn is_transitive(&self) -> bool {
        self.degree <= 1 || self.orbits().len() == 1
    }

    pub fn is_normal_in(&self, g: &PermGroup) -> bool {
        self.is_subgroup_of(g) && g.gens.iter().all(|x| self.gens.iter().all(|h| self.contains(&x.conjugate(h))))
    }

    /// Smallest normal subgroup of `self` containing `seeds`.
    pub fn normal_closure(&self, seeds: &[Permutation]) -> Result<PermGroup, PermError> {
        for s in seeds {
            if !self.contains(s) {
                return Err(PermError::NotMember);
            }
        }
        let mut h = PermGroup::trivial(self.degree);
        let mut queue: Vec<Permutation> = seeds.to_vec();
        while let Some(s) = queue.pop() {
            if h.contains(&s) {
                continue;
            }
            h.push_generator(s.clone());
            for x in &self.gens {
                queue.push(x.conjugate(&s));
            }
        }
        // Conjugates of every generator of h now lie in h.
        Ok(h)
    }

    /// `[self, n]` for a subgroup n normalised by self.
    pub fn commutator_with(&self, n: &PermGroup) -> PermGroup {
        let seeds: Vec<Permutation> = self
            .gens
            .iter()
            .flat_map(|g| n.gens.iter().map(move |h| Permutation::commutator(g, h)))
            .filter(|c| !c.is_identity())
            .collect();
        let mut join = self.clone();
        for h in &n.gens {
            join.push_generator(h.clone());
        }
        join.normal_closure(&seeds).expect("commutators lie in the join")
    }

    pub fn derived_subgroup(&self) -> PermGroup {
        self.commutator_with(self)
    }

    /// G, G', G'', ... ending at the first repeated term.
    pub fn derived_series(&self) -> Vec<PermGroup> {
        let mut out = vec![self.clone()];
        loop {
            let last = out.last().unwrap();
            let next = last.derived_subgroup();
            if next.order() == last.order() {
                return out;
            }
            out.push(next);
        }
    }

    /// γ₀ = G, γ_{i+1} = [G, γ_i], ending at the first repeated term.
    pub fn lower_central_series(&self) -> Vec<PermGroup> {
        let mut out = vec![self.clone()];
        loop {
            let last = out.last().unwrap();
            let next = self.commutator_with(last);
            if next.order() == last.order() {
                return out;
            }
            out.push(next);
        }
    }

    pub fn is_solvable(&self) -> bool {
        self.derived_series().last().unwrap().is_trivial()
    }

    pub fn is_nilpotent(&self) -> bool {
        self.lower_central_series().last().unwrap().is_trivial()
    }

    pub fn center(&self) -> Result<PermGroup, PermError> {
        let central: Vec<Permutation> =
            self.elements()?.into_iter().filter(|z| self.gens.iter().all(|g| g.compose(z) == z.compose(g))).collect();
        Ok(PermGroup::from_elements(self.degree, &central))
    }

    /// Elements that fix every block of `partition` setwise.
    pub fn block_action_kernel(&self, partition: &[usize]) -> Result<PermGroup, PermError> {
        if partition.len() != self.degree {
            return Err(PermError::DegreeMismatch { expected: self.degree, got: partition.len() });
        }
        check_invariant_partition(&self.gens, partition)?;
        let kernel: Vec<Permutation> = self
            .elements()?
            .into_iter()
            .filter(|g| (0..self.degree).all(|x| partition[g.apply(x)] == partition[x]))
            .collect();
        Ok(PermGroup::from_elements(self.degree, &kernel))
    }

    pub fn intersection(&self, other: &PermGroup) -> Result<PermGroup, PermError> {
        let (small, big) = if self.order() <= other.order() { (self, other) } else { (other, self) };
        let common: Vec<Permutation> = small.elements()?.into_iter().filter(|g| big.contains(g)).collect();
        Ok(PermGroup::from_elements(self.degree, &common))
    }

    pub fn join(&self, other: &PermGroup) -> PermGroup {
        let mut j = self.clone();
        for g in &other.gens {
            j.push_generator(g.clone());
        }
        j
    }

    /// Action of self on the left cosets of a normal subgroup.
    pub fn coset_action(&self, n: &PermGroup) -> Result<CosetAction, PermError> {
        if !n.is_normal_in(self) {
            return Err(PermError::NotNormal);
        }
        let index = self.order() / n.order();
        if index > COSET_INDEX_CAP {
            return Err(PermError::Capacity { order: index, cap: COSET_INDEX_CAP });
        }
        let elements = self.elements()?;
        let n_elems = n.elements()?;
        let lookup: HashMap<&Permutation, usize> = elements.iter().enumerate().map(|(i, g)| (g, i)).collect();
        let mut coset_of = vec![u32::MAX; elements.len()];
        let mut reps = Vec::new();
        for (i, g) in elements.iter().enumerate() {
            if coset_of[i] != u32::MAX {
                continue;
            }
            let c = reps.len() as u32;
            reps.push(i);
            for h in &n_elems {
                coset_of[lookup[&g.compose(h)]] = c;
            }
        }
        let k = reps.len();
        let act = |x: &Permutation| -> Permutation {
            let images: Vec<usize> =
                reps.iter().map(|&r| coset_of[lookup[&x.compose(&elements[r])]] as usize).collect();
            Permutation::from_images(&images).expect("coset action is a permutation")
        };
        let gens: Vec<Permutation> = self.gens.iter().map(act).collect();
        let group = PermGroup::closure(k, &gens)?;
        drop(lookup);
        Ok(CosetAction { group, elements, coset_of, reps })
    }

    /// Orders of all elements, as a sorted multiset.
    pub fn element_orders(&self) -> Result<Vec<u64>, PermError> {
        let mut v: Vec<u64> = self.elements()?.iter().map(|g| g.order()).collect();
        v.sort_unstable();
        Ok(v)
    }
}

/// Result of [`PermGroup::coset_action`].
#[derive(Clone, Debug)]
pub struct CosetAction {
    /// Image of the action on the cosets.
    pub group: PermGroup,
    /// The elements of the acting group.
    pub elements: Vec<Permutation>,
    /// Coset index of each element.
    pub coset_of: Vec<u32>,
    /// Element index of a representative of each coset.
    pub reps: Vec<usize>,
}

impl CosetAction {
    pub fn coset_of_element(&self, g: &Permutation) -> Option<usize> {
        self.elements.iter().position(|e| e == g).map(|i| self.coset_of[i] as usize)
    }
}

pub fn orbits_of(degree: usize, gens: &[Permutation]) -> Vec<Vec<usize>> {
    let mut seen = vec![false; degree];
    let mut out = Vec::new();
    for s in 0..degree {
        if seen[s] {
            continue;
        }
        seen[s] = true;
        let mut orb = vec![s];
        let mut head = 0;
        while head < orb.len() {
            let x = orb[head];
            for g in gens {
                let y = g.apply(x);
                if !seen[y] {
                    seen[y] = true;
                    orb.push(y);
                }
            }
            head += 1;
        }
        orb.sort_unstable();
        out.push(orb);
    }
    out
}

fn check_invariant_partition(gens: &[Permutation], partition: &[usize]) -> Result<(), PermError> {
    for g in gens {
        let mut image_of_block: HashMap<usize, usize> = HashMap::new();
        for (x, &b) in partition.iter().enumerate() {
            let target = partition[g.apply(x)];
            if *image_of_block.entry(b).or_insert(target) != target {
                return Err(PermError::NotInvariant);
            }
        }
    }
    Ok(())
}
