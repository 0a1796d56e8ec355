//! Stabiliser chains built by the incremental Schreier–Sims algorithm.

use super::Permutation;

const NONE: u32 = u32::MAX;

#[derive(Clone, Debug)]
pub(crate) struct Level {
    pub base: usize,
    pub gens: Vec<Permutation>,
    pub orbit: Vec<u16>,
    /// `slot[x]` indexes `reps` for orbit points, NONE elsewhere.
    slot: Vec<u32>,
    /// `reps[k]` maps the base point to `orbit[k]`.
    reps: Vec<Permutation>,
}

impl Level {
    fn new(base: usize, degree: usize) -> Self {
        let mut lvl = Level { base, gens: Vec::new(), orbit: Vec::new(), slot: vec![NONE; degree], reps: Vec::new() };
        lvl.rebuild(degree);
        lvl
    }

    fn rebuild(&mut self, degree: usize) {
        self.orbit.clear();
        self.reps.clear();
        self.slot.iter_mut().for_each(|s| *s = NONE);
        self.slot[self.base] = 0;
        self.orbit.push(self.base as u16);
        self.reps.push(Permutation::identity(degree));
        let mut head = 0;
        while head < self.orbit.len() {
            let beta = self.orbit[head] as usize;
            for g in &self.gens {
                let gamma = g.apply(beta);
                if self.slot[gamma] == NONE {
                    self.slot[gamma] = self.orbit.len() as u32;
                    self.orbit.push(gamma as u16);
                    let rep = g.compose(&self.reps[head]);
                    self.reps.push(rep);
                }
            }
            head += 1;
        }
    }

    #[inline]
    pub fn rep(&self, x: usize) -> Option<&Permutation> {
        match self.slot[x] {
            NONE => None,
            k => Some(&self.reps[k as usize]),
        }
    }

    pub fn reps(&self) -> &[Permutation] {
        &self.reps
    }
}

#[derive(Clone, Debug)]
pub(crate) struct StabChain {
    pub degree: usize,
    pub levels: Vec<Level>,
}

impl StabChain {
    pub fn trivial(degree: usize) -> Self {
        StabChain { degree, levels: Vec::new() }
    }

    /// Sifts `g` from `start`; returns the residue and the level where it
    /// left the chain (`levels.len()` when it passed every level).
    pub fn strip(&self, g: &Permutation, start: usize) -> (Permutation, usize) {
        let mut h = g.clone();
        let mut scratch = Vec::new();
        for (l, lvl) in self.levels.iter().enumerate().skip(start) {
            let beta = h.apply(lvl.base);
            if beta == lvl.base {
                continue;
            }
            match lvl.rep(beta) {
                None => return (h, l),
                Some(u) => h = u.inverse_compose(&h, &mut scratch),
            }
        }
        (h, self.levels.len())
    }

    pub fn contains(&self, g: &Permutation) -> bool {
        let (h, l) = self.strip(g, 0);
        l == self.levels.len() && h.is_identity()
    }

    pub fn order(&self) -> u128 {
        self.levels.iter().fold(1u128, |acc, l| acc.saturating_mul(l.orbit.len() as u128))
    }

    /// Adds a generator; afterwards the chain is complete for the enlarged group.
    pub fn add_generator(&mut self, g: &Permutation) {
        if self.contains(g) {
            return;
        }
        let m = self.first_moved_level(g);
        self.insert_at(g.clone(), 0, m);
        self.complete_from(m);
    }

    /// Index of the first level whose base point g moves, adding a base point
    /// when g fixes them all.
    fn first_moved_level(&mut self, g: &Permutation) -> usize {
        if let Some(l) = self.levels.iter().position(|lvl| g.apply(lvl.base) != lvl.base) {
            return l;
        }
        let moved = (0..self.degree).find(|&x| g.apply(x) != x).expect("non-identity residue");
        self.levels.push(Level::new(moved, self.degree));
        self.levels.len() - 1
    }

    fn insert_at(&mut self, h: Permutation, from: usize, to: usize) {
        for l in from..=to {
            self.levels[l].gens.push(h.clone());
            let degree = self.degree;
            self.levels[l].rebuild(degree);
        }
    }

    /// Restores completeness for levels `0..=top`, assuming deeper levels are complete.
    fn complete_from(&mut self, top: usize) {
        let mut i = top as isize;
        let mut scratch = Vec::new();
        'levels: while i >= 0 {
            let lvl = i as usize;
            let n_orbit = self.levels[lvl].orbit.len();
            for k in 0..n_orbit {
                let n_gens = self.levels[lvl].gens.len();
                for s_idx in 0..n_gens {
                    let level = &self.levels[lvl];
                    let beta = level.orbit[k] as usize;
                    let s = &level.gens[s_idx];
                    let gamma = s.apply(beta);
                    let u_beta = &level.reps[k];
                    let u_gamma = level.rep(gamma).expect("orbit is closed");
                    let sg = u_gamma.inverse_compose(&s.compose(u_beta), &mut scratch);
                    if sg.is_identity() {
                        continue;
                    }
                    let (h, j) = self.strip(&sg, lvl + 1);
                    if j == self.levels.len() && h.is_identity() {
                        continue;
                    }
                    let j = if j == self.levels.len() { self.first_moved_level(&h) } else { j };
                    self.insert_at(h, lvl + 1, j);
                    i = j as isize;
                    continue 'levels;
                }
            }
            i -= 1;
        }
    }

    /// Uniform element given one random index per level.
    pub fn element_from_indices(&self, idx: &[usize]) -> Permutation {
        let mut g = Permutation::identity(self.degree);
        for (lvl, &k) in self.levels.iter().zip(idx) {
            g = g.compose(&lvl.reps[k]);
        }
        g
    }
}
