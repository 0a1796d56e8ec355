use super::QuandleError;
use crate::permgrp::{PermGroup, Permutation};

/// Finite quandle as a Cayley table over {0, .., n-1}.
///
/// `star[x*n + y] = x * y` and `ldiv[x*n + y] = x \ y`, so every row of
/// `star` is the left translation L_x.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct QuandleTable {
    n: usize,
    star: Vec<u16>,
    ldiv: Vec<u16>,
}

impl QuandleTable {
    /// Validates all quandle axioms; left distributivity costs O(n³).
    pub fn new(n: usize, star: Vec<u16>) -> Result<Self, QuandleError> {
        let q = Self::from_trusted(n, star)?;
        q.check_distributive()?;
        Ok(q)
    }

    /// Checks left translations and idempotence only; for tables whose
    /// distributivity holds by construction.
    pub fn from_trusted(n: usize, star: Vec<u16>) -> Result<Self, QuandleError> {
        if n == 0 || n > u16::MAX as usize {
            return Err(QuandleError::Size(n));
        }
        if star.len() != n * n {
            return Err(QuandleError::Size(star.len()));
        }
        let mut ldiv = vec![u16::MAX; n * n];
        for x in 0..n {
            for y in 0..n {
                let z = star[x * n + y] as usize;
                if z >= n || ldiv[x * n + z] != u16::MAX {
                    return Err(QuandleError::NotPermutationRow { row: x });
                }
                ldiv[x * n + z] = y as u16;
            }
            if star[x * n + x] as usize != x {
                return Err(QuandleError::NotIdempotent { x });
            }
        }
        Ok(QuandleTable { n, star, ldiv })
    }

    pub fn check_distributive(&self) -> Result<(), QuandleError> {
        let n = self.n;
        for x in 0..n {
            for y in 0..n {
                let xy = self.star(x, y);
                for z in 0..n {
                    if self.star(x, self.star(y, z)) != self.star(xy, self.star(x, z)) {
                        return Err(QuandleError::NotDistributive { x, y, z });
                    }
                }
            }
        }
        Ok(())
    }

    /// The trivial quandle x * y = y.
    pub fn trivial(n: usize) -> Self {
        let star = (0..n * n).map(|i| (i % n) as u16).collect();
        Self::from_trusted(n, star).expect("projection quandle")
    }

    #[inline]
    pub fn size(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn star(&self, x: usize, y: usize) -> usize {
        self.star[x * self.n + y] as usize
    }

    #[inline]
    pub fn ldiv(&self, x: usize, y: usize) -> usize {
        self.ldiv[x * self.n + y] as usize
    }

    pub fn row(&self, x: usize) -> &[u16] {
        &self.star[x * self.n..(x + 1) * self.n]
    }

    pub fn left_translation(&self, x: usize) -> Permutation {
        Permutation::from_u16(self.row(x).to_vec())
    }

    /// R_x : y ↦ y * x; a permutation exactly when column x is one.
    pub fn right_translation(&self, x: usize) -> Option<Permutation> {
        let img: Vec<usize> = (0..self.n).map(|y| self.star(y, x)).collect();
        Permutation::from_images(&img).ok()
    }

    pub fn is_latin(&self) -> bool {
        let n = self.n;
        let mut seen = vec![0usize; n];
        for y in 0..n {
            for x in 0..n {
                let z = self.star(x, y);
                if seen[z] == y + 1 {
                    return false;
                }
                seen[z] = y + 1;
            }
        }
        true
    }

    /// LMlt acts transitively.
    pub fn is_connected(&self) -> bool {
        let n = self.n;
        let mut seen = vec![false; n];
        seen[0] = true;
        let mut stack = vec![0];
        let mut count = 1;
        while let Some(y) = stack.pop() {
            for x in 0..n {
                for z in [self.star(x, y), self.ldiv(x, y)] {
                    if !seen[z] {
                        seen[z] = true;
                        count += 1;
                        stack.push(z);
                    }
                }
            }
        }
        count == n
    }

    /// Distinct elements have distinct left translations.
    pub fn is_faithful(&self) -> bool {
        let mut rows: Vec<&[u16]> = (0..self.n).map(|x| self.row(x)).collect();
        rows.sort_unstable();
        rows.windows(2).all(|w| w[0] != w[1])
    }

    /// Closure of `gens` under `*` and `\`.
    pub fn subquandle_generated(&self, gens: &[usize]) -> Vec<usize> {
        let mut inside = vec![false; self.n];
        let mut members: Vec<usize> = Vec::new();
        for &g in gens {
            if !inside[g] {
                inside[g] = true;
                members.push(g);
            }
        }
        let mut i = 0;
        while i < members.len() {
            let a = members[i];
            for j in 0..=i {
                let b = members[j];
                for z in [self.star(a, b), self.star(b, a), self.ldiv(a, b), self.ldiv(b, a)] {
                    if !inside[z] {
                        inside[z] = true;
                        members.push(z);
                    }
                }
            }
            i += 1;
        }
        members.sort_unstable();
        members
    }
}

/// Left multiplication group ⟨L_x⟩.
pub fn lmlt(q: &QuandleTable) -> PermGroup {
    let gens: Vec<Permutation> = (0..q.size()).map(|x| q.left_translation(x)).collect();
    PermGroup::closure(q.size(), &gens).expect("degrees agree")
}

/// Displacement group, generated by L_x L_0⁻¹.
pub fn dis(q: &QuandleTable) -> PermGroup {
    let l0_inv = q.left_translation(0).inverse();
    let gens: Vec<Permutation> = (1..q.size()).map(|x| q.left_translation(x).compose(&l0_inv)).collect();
    PermGroup::closure(q.size(), &gens).expect("degrees agree")
}

/// Partition by equal left translations, as block labels in order of first
/// appearance.
pub fn cayley_kernel(q: &QuandleTable) -> Vec<usize> {
    let mut labels = vec![usize::MAX; q.size()];
    let mut next = 0;
    for x in 0..q.size() {
        if labels[x] != usize::MAX {
            continue;
        }
        for (y, label) in labels.iter_mut().enumerate().skip(x) {
            if *label == usize::MAX && q.row(x) == q.row(y) {
                *label = next;
            }
        }
        next += 1;
    }
    labels
}
