use std::collections::HashMap;
use std::sync::Arc;

use super::GroupError;
use crate::linfq::{index_to_vec, vec_to_index, FqMatrix};
use crate::permgrp::{PermGroup, Permutation};

/// Element of a [`FiniteGroup`], a canonical index in `0..order`; 0 is the identity.
pub type Elem = u32;

/// Finite group with canonically indexed elements.
///
/// Semidirect products `V ⋊ K` index `(v, k)` as `v + |V|·k`; direct
/// products index `(a, b)` as `a + |A|·b`; vectors of `Z_m^t` use mixed
/// radix with coordinate 0 least significant.
#[derive(Clone, Debug)]
pub struct FiniteGroup {
    kind: Kind,
    order: usize,
    gens: Vec<Elem>,
}

#[derive(Clone, Debug)]
enum Kind {
    Table { mul: Arc<Vec<Elem>>, inv: Vec<Elem> },
    Vector { m: u32, t: usize, add: Option<Arc<Vec<Elem>>> },
    Semidirect { v: Box<FiniteGroup>, k: Box<FiniteGroup>, act: Arc<Vec<Elem>> },
    Direct { a: Box<FiniteGroup>, b: Box<FiniteGroup> },
}

impl FiniteGroup {
    /// Builds a group from a multiplication table `mul[a*n + b]`.
    ///
    /// Checks closure, identity, inverses, and associativity (the last only
    /// for n ≤ 128); the identity is moved to index 0.
    pub fn from_table(n: usize, mul: Vec<Elem>) -> Result<Self, GroupError> {
        if mul.len() != n * n || n == 0 {
            return Err(GroupError::BadTable("table size is not n^2".into()));
        }
        if mul.iter().any(|&x| x as usize >= n) {
            return Err(GroupError::BadTable("entry out of range".into()));
        }
        let e = (0..n)
            .find(|&e| (0..n).all(|x| mul[e * n + x] as usize == x && mul[x * n + e] as usize == x))
            .ok_or_else(|| GroupError::BadTable("no identity".into()))?;
        // Relabel so the identity is 0.
        let relabel = |x: usize| -> usize {
            if x == e {
                0
            } else if x == 0 {
                e
            } else {
                x
            }
        };
        let mut t = vec![0; n * n];
        for a in 0..n {
            for b in 0..n {
                t[relabel(a) * n + relabel(b)] = relabel(mul[a * n + b] as usize) as Elem;
            }
        }
        let mut inv = vec![Elem::MAX; n];
        for a in 0..n {
            for b in 0..n {
                if t[a * n + b] == 0 {
                    inv[a] = b as Elem;
                }
            }
            if inv[a] == Elem::MAX {
                return Err(GroupError::BadTable(format!("element {a} has no inverse")));
            }
        }
        if n <= 128 {
            for a in 0..n {
                for b in 0..n {
                    let ab = t[a * n + b] as usize;
                    for c in 0..n {
                        if t[ab * n + c] != t[a * n + t[b * n + c] as usize] {
                            return Err(GroupError::BadTable("not associative".into()));
                        }
                    }
                }
            }
        }
        let mut g = FiniteGroup { kind: Kind::Table { mul: Arc::new(t), inv }, order: n, gens: vec![] };
        g.gens = g.greedy_generators();
        Ok(g)
    }

    /// Cyclic group Z_n.
    pub fn cyclic(n: usize) -> Self {
        let mul = (0..n * n).map(|i| ((i / n + i % n) % n) as Elem).collect();
        Self::from_table(n, mul).expect("cyclic table")
    }

    /// Additive group Z_m^t.
    pub fn vector(m: u32, t: usize) -> Self {
        let order = (m as usize).pow(t as u32);
        let add = if m != 2 && order <= 1024 {
            let mut tab = vec![0; order * order];
            for a in 0..order {
                let va = index_to_vec(m, t, a);
                for b in 0..order {
                    let vb = index_to_vec(m, t, b);
                    let s: Vec<u32> = va.iter().zip(&vb).map(|(x, y)| (x + y) % m).collect();
                    tab[a * order + b] = vec_to_index(m, &s) as Elem;
                }
            }
            Some(Arc::new(tab))
        } else {
            None
        };
        let gens = (0..t).map(|i| (m as usize).pow(i as u32) as Elem).collect();
        FiniteGroup { kind: Kind::Vector { m, t, add }, order, gens }
    }

    /// `Z_p^t ⋊_ρ K`, with `rho[k]` the matrix of element k of K.
    ///
    /// Fails unless ρ is a homomorphism into GL_t(p).
    pub fn semidirect(t: usize, p: u32, k: &FiniteGroup, rho: &[FqMatrix]) -> Result<Self, GroupError> {
        if rho.len() != k.order() {
            return Err(GroupError::NotHomomorphism("ρ must list a matrix per element".into()));
        }
        for (i, m) in rho.iter().enumerate() {
            if m.p() != p || m.rows() != t || !m.is_invertible() {
                return Err(GroupError::NotHomomorphism(format!("ρ({i}) is not in GL_{t}({p})")));
            }
        }
        for a in 0..k.order() {
            for b in 0..k.order() {
                let ab = k.mul(a as Elem, b as Elem) as usize;
                if rho[ab] != &rho[a] * &rho[b] {
                    return Err(GroupError::NotHomomorphism(format!("ρ({a})ρ({b}) differs from ρ({a}·{b})")));
                }
            }
        }
        let v = Self::vector(p, t);
        let nv = v.order();
        let mut act = vec![0; k.order() * nv];
        for (kk, m) in rho.iter().enumerate() {
            for x in 0..nv {
                act[kk * nv + x] = vec_to_index(p, &m.mul_vec(&index_to_vec(p, t, x))) as Elem;
            }
        }
        Ok(Self::semidirect_from_action(v, k.clone(), act))
    }

    /// Semidirect product from an explicit action table `act[k*|V| + v]`,
    /// assumed to be an action by automorphisms.
    pub(crate) fn semidirect_from_action(v: FiniteGroup, k: FiniteGroup, act: Vec<Elem>) -> Self {
        let nv = v.order() as Elem;
        let mut gens: Vec<Elem> = v.gens.clone();
        gens.extend(k.gens.iter().map(|&g| g * nv));
        let order = v.order() * k.order();
        FiniteGroup { kind: Kind::Semidirect { v: Box::new(v), k: Box::new(k), act: Arc::new(act) }, order, gens }
    }

    pub fn direct(a: &FiniteGroup, b: &FiniteGroup) -> Self {
        let na = a.order() as Elem;
        let mut gens: Vec<Elem> = a.gens.clone();
        gens.extend(b.gens.iter().map(|&g| g * na));
        FiniteGroup {
            kind: Kind::Direct { a: Box::new(a.clone()), b: Box::new(b.clone()) },
            order: a.order() * b.order(),
            gens,
        }
    }

    /// Table group isomorphic to a permutation group, with the element list.
    pub fn from_perm_group(g: &PermGroup) -> Result<(Self, Vec<Permutation>), GroupError> {
        let els = g.elements().map_err(|e| GroupError::TooLarge(e.to_string()))?;
        let n = els.len();
        if n > 4096 {
            return Err(GroupError::TooLarge(format!("table of order {n}")));
        }
        let idx: HashMap<&Permutation, usize> = els.iter().enumerate().map(|(i, p)| (p, i)).collect();
        let mut mul = vec![0; n * n];
        for a in 0..n {
            for b in 0..n {
                mul[a * n + b] = idx[&els[a].compose(&els[b])] as Elem;
            }
        }
        drop(idx);
        // elements() lists the identity first, so indices are preserved.
        debug_assert!(els[0].is_identity());
        Ok((Self::from_table(n, mul)?, els))
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn identity(&self) -> Elem {
        0
    }

    /// A generating set, fixed at construction.
    pub fn generators(&self) -> &[Elem] {
        &self.gens
    }

    pub fn tag(&self) -> &'static str {
        match self.kind {
            Kind::Table { .. } => "table",
            Kind::Vector { .. } => "vector",
            Kind::Semidirect { .. } => "semidirect",
            Kind::Direct { .. } => "direct",
        }
    }

    /// Factors of a semidirect or direct product.
    pub fn factors(&self) -> Option<(&FiniteGroup, &FiniteGroup)> {
        match &self.kind {
            Kind::Semidirect { v, k, .. } => Some((v, k)),
            Kind::Direct { a, b } => Some((a, b)),
            _ => None,
        }
    }

    /// Element of a product from its two coordinates.
    pub fn pair(&self, x: Elem, y: Elem) -> Elem {
        let (a, _) = self.factors().expect("product group");
        x + a.order() as Elem * y
    }

    /// Coordinates of an element of a product.
    pub fn split(&self, g: Elem) -> (Elem, Elem) {
        let (a, _) = self.factors().expect("product group");
        let na = a.order() as Elem;
        (g % na, g / na)
    }

    #[inline]
    pub fn mul(&self, x: Elem, y: Elem) -> Elem {
        match &self.kind {
            Kind::Table { mul, .. } => mul[x as usize * self.order + y as usize],
            Kind::Vector { m, t, add } => {
                if *m == 2 {
                    x ^ y
                } else if let Some(tab) = add {
                    tab[x as usize * self.order + y as usize]
                } else {
                    let (mut a, mut b, mut out, mut place) = (x, y, 0u32, 1u32);
                    for _ in 0..*t {
                        out += ((a % m + b % m) % m) * place;
                        a /= m;
                        b /= m;
                        place *= m;
                    }
                    out
                }
            }
            Kind::Semidirect { v, k, act } => {
                let nv = v.order() as Elem;
                let (v1, k1) = (x % nv, x / nv);
                let (v2, k2) = (y % nv, y / nv);
                let moved = act[(k1 * nv + v2) as usize];
                v.mul(v1, moved) + nv * k.mul(k1, k2)
            }
            Kind::Direct { a, b } => {
                let na = a.order() as Elem;
                a.mul(x % na, y % na) + na * b.mul(x / na, y / na)
            }
        }
    }

    pub fn inv(&self, x: Elem) -> Elem {
        match &self.kind {
            Kind::Table { inv, .. } => inv[x as usize],
            Kind::Vector { m, t, .. } => {
                if *m == 2 {
                    return x;
                }
                let v: Vec<u32> = index_to_vec(*m, *t, x as usize).iter().map(|&c| (m - c) % m).collect();
                vec_to_index(*m, &v) as Elem
            }
            Kind::Semidirect { v, k, act } => {
                // (v, k)⁻¹ = (−ρ_{k⁻¹}(v), k⁻¹)
                let nv = v.order() as Elem;
                let (vx, kx) = (x % nv, x / nv);
                let ki = k.inv(kx);
                let moved = act[(ki * nv + vx) as usize];
                v.inv(moved) + nv * ki
            }
            Kind::Direct { a, b } => {
                let na = a.order() as Elem;
                a.inv(x % na) + na * b.inv(x / na)
            }
        }
    }

    pub fn pow(&self, x: Elem, e: i64) -> Elem {
        let base = if e < 0 { self.inv(x) } else { x };
        let mut e = e.unsigned_abs();
        let (mut acc, mut b) = (0, base);
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, b);
            }
            b = self.mul(b, b);
            e >>= 1;
        }
        acc
    }

    pub fn element_order(&self, x: Elem) -> usize {
        let mut y = x;
        let mut k = 1;
        while y != 0 {
            y = self.mul(y, x);
            k += 1;
        }
        k
    }

    /// `x⁻¹ y⁻¹ x y`
    pub fn commutator(&self, x: Elem, y: Elem) -> Elem {
        let xi = self.inv(x);
        let yi = self.inv(y);
        self.mul(self.mul(xi, yi), self.mul(x, y))
    }

    /// `x y x⁻¹`
    pub fn conjugate(&self, x: Elem, y: Elem) -> Elem {
        self.mul(self.mul(x, y), self.inv(x))
    }

    pub fn is_abelian(&self) -> bool {
        self.gens.iter().all(|&a| self.gens.iter().all(|&b| self.mul(a, b) == self.mul(b, a)))
    }

    /// Subgroup generated by `gens`.
    pub fn closure(&self, gens: &[Elem]) -> Subgroup {
        let mut mask = vec![false; self.order];
        mask[0] = true;
        let mut members = vec![0];
        let mut head = 0;
        while head < members.len() {
            let x = members[head];
            for &g in gens {
                let y = self.mul(x, g);
                if !mask[y as usize] {
                    mask[y as usize] = true;
                    members.push(y);
                }
            }
            head += 1;
        }
        Subgroup::from_mask(mask)
    }

    fn greedy_generators(&self) -> Vec<Elem> {
        let mut gens = Vec::new();
        let mut sub = self.closure(&[]);
        for x in 0..self.order as Elem {
            if !sub.contains(x) {
                gens.push(x);
                sub = self.closure(&gens);
            }
        }
        gens
    }

    /// Smallest normal subgroup containing `seeds`.
    pub fn normal_closure(&self, seeds: &[Elem]) -> Subgroup {
        let mut gens: Vec<Elem> = Vec::new();
        let mut sub = self.closure(&[]);
        let mut queue: Vec<Elem> = seeds.to_vec();
        while let Some(s) = queue.pop() {
            if sub.contains(s) {
                continue;
            }
            gens.push(s);
            sub = self.closure(&gens);
            for &g in &self.gens {
                queue.push(self.conjugate(g, s));
            }
        }
        sub
    }

    /// `[H, N]` for subgroups normalised by the whole group.
    pub fn commutator_subgroup(&self, h: &Subgroup, n: &Subgroup) -> Subgroup {
        let hg = self.subgroup_generators(h);
        let ng = self.subgroup_generators(n);
        let seeds: Vec<Elem> =
            hg.iter().flat_map(|&a| ng.iter().map(move |&b| (a, b))).map(|(a, b)| self.commutator(a, b)).collect();
        self.normal_closure(&seeds)
    }

    pub fn whole(&self) -> Subgroup {
        Subgroup::from_mask(vec![true; self.order])
    }

    pub fn derived_subgroup(&self) -> Subgroup {
        let w = self.whole();
        self.commutator_subgroup(&w, &w)
    }

    /// γ₀ = G, γ_{i+1} = [G, γ_i], ending at the first repeated term.
    pub fn lower_central_series(&self) -> Vec<Subgroup> {
        let w = self.whole();
        let mut out = vec![w.clone()];
        loop {
            let next = self.commutator_subgroup(&w, out.last().unwrap());
            if next.order() == out.last().unwrap().order() {
                return out;
            }
            out.push(next);
        }
    }

    pub fn center(&self) -> Subgroup {
        let mask =
            (0..self.order as Elem).map(|z| self.gens.iter().all(|&g| self.mul(g, z) == self.mul(z, g))).collect();
        Subgroup::from_mask(mask)
    }

    /// Small generating set of a subgroup, chosen greedily.
    pub fn subgroup_generators(&self, h: &Subgroup) -> Vec<Elem> {
        let mut gens = Vec::new();
        let mut sub = self.closure(&[]);
        for &x in h.members() {
            if !sub.contains(x) {
                gens.push(x);
                sub = self.closure(&gens);
            }
        }
        gens
    }

    pub fn is_normal(&self, h: &Subgroup) -> bool {
        let hg = self.subgroup_generators(h);
        self.gens.iter().all(|&g| hg.iter().all(|&x| h.contains(self.conjugate(g, x))))
    }

    /// Quotient by a normal subgroup as a table group, with the projection.
    pub fn quotient(&self, n: &Subgroup) -> Result<(FiniteGroup, Vec<Elem>), GroupError> {
        if !self.is_normal(n) {
            return Err(GroupError::NotNormal);
        }
        let mut coset = vec![Elem::MAX; self.order];
        let mut reps = Vec::new();
        for x in 0..self.order as Elem {
            if coset[x as usize] != Elem::MAX {
                continue;
            }
            let c = reps.len() as Elem;
            reps.push(x);
            for &h in n.members() {
                coset[self.mul(x, h) as usize] = c;
            }
        }
        let k = reps.len();
        let mut mul = vec![0; k * k];
        for a in 0..k {
            for b in 0..k {
                mul[a * k + b] = coset[self.mul(reps[a], reps[b]) as usize];
            }
        }
        Ok((FiniteGroup::from_table(k, mul)?, coset))
    }

    /// Permutation image of the left regular action, for use with the
    /// permutation group algorithms.
    pub fn regular_permutation(&self, g: Elem) -> Permutation {
        let img: Vec<u16> = (0..self.order as Elem).map(|x| self.mul(g, x) as u16).collect();
        Permutation::from_u16(img)
    }

    /// Sorted multiset of element orders.
    pub fn order_statistics(&self) -> Vec<usize> {
        let mut v: Vec<usize> = (0..self.order as Elem).map(|x| self.element_order(x)).collect();
        v.sort_unstable();
        v
    }
}

/// Subgroup as a sorted element list.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Subgroup {
    members: Vec<Elem>,
}

impl Subgroup {
    pub fn from_mask(mask: Vec<bool>) -> Self {
        Subgroup { members: mask.iter().enumerate().filter(|(_, &b)| b).map(|(i, _)| i as Elem).collect() }
    }

    pub fn from_members(mut members: Vec<Elem>) -> Self {
        members.sort_unstable();
        members.dedup();
        Subgroup { members }
    }

    pub fn order(&self) -> usize {
        self.members.len()
    }

    pub fn members(&self) -> &[Elem] {
        &self.members
    }

    pub fn contains(&self, x: Elem) -> bool {
        self.members.binary_search(&x).is_ok()
    }

    pub fn is_subset_of(&self, other: &Subgroup) -> bool {
        self.members.iter().all(|&x| other.contains(x))
    }

    pub fn intersection(&self, other: &Subgroup) -> Subgroup {
        Subgroup { members: self.members.iter().copied().filter(|&x| other.contains(x)).collect() }
    }
}
