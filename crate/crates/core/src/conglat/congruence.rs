use std::collections::HashMap;

use crate::quandle::QuandleTable;

/// Equivalence relation on {0, .., n-1} as canonical block labels: blocks
/// are numbered in order of their least element.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Congruence {
    labels: Vec<u32>,
}

impl Congruence {
    pub fn from_labels(raw: &[usize]) -> Self {
        let mut map: HashMap<usize, u32> = HashMap::new();
        let labels = raw
            .iter()
            .map(|&b| {
                let k = map.len() as u32;
                *map.entry(b).or_insert(k)
            })
            .collect();
        Congruence { labels }
    }

    pub fn bottom(n: usize) -> Self {
        Congruence { labels: (0..n as u32).collect() }
    }

    pub fn top(n: usize) -> Self {
        Congruence { labels: vec![0; n] }
    }

    pub fn size(&self) -> usize {
        self.labels.len()
    }

    #[inline]
    pub fn block_of(&self, x: usize) -> usize {
        self.labels[x] as usize
    }

    pub fn labels(&self) -> Vec<usize> {
        self.labels.iter().map(|&l| l as usize).collect()
    }

    pub fn related(&self, x: usize, y: usize) -> bool {
        self.labels[x] == self.labels[y]
    }

    pub fn num_blocks(&self) -> usize {
        self.labels.iter().max().map_or(0, |&m| m as usize + 1)
    }

    pub fn blocks(&self) -> Vec<Vec<usize>> {
        let mut out = vec![Vec::new(); self.num_blocks()];
        for (x, &b) in self.labels.iter().enumerate() {
            out[b as usize].push(x);
        }
        out
    }

    /// Sorted block sizes.
    pub fn block_sizes(&self) -> Vec<usize> {
        let mut s: Vec<usize> = self.blocks().iter().map(|b| b.len()).collect();
        s.sort_unstable();
        s
    }

    pub fn is_bottom(&self) -> bool {
        self.num_blocks() == self.size()
    }

    pub fn is_top(&self) -> bool {
        self.num_blocks() <= 1
    }

    /// self ⊆ other as relations.
    pub fn leq(&self, other: &Congruence) -> bool {
        let mut image = vec![u32::MAX; self.num_blocks()];
        for (x, &b) in self.labels.iter().enumerate() {
            let t = other.labels[x];
            match image[b as usize] {
                u32::MAX => image[b as usize] = t,
                prev if prev != t => return false,
                _ => {}
            }
        }
        true
    }

    /// Intersection of the relations.
    pub fn meet(&self, other: &Congruence) -> Congruence {
        let pairs: Vec<usize> =
            self.labels.iter().zip(&other.labels).map(|(&a, &b)| a as usize * other.size() + b as usize).collect();
        Congruence::from_labels(&pairs)
    }

    /// Transitive closure of the union.
    pub fn join(&self, other: &Congruence) -> Congruence {
        let mut uf = UnionFind::new(self.size());
        for rel in [self, other] {
            let mut first = vec![usize::MAX; rel.num_blocks()];
            for (x, &b) in rel.labels.iter().enumerate() {
                if first[b as usize] == usize::MAX {
                    first[b as usize] = x;
                } else {
                    uf.union(first[b as usize], x);
                }
            }
        }
        uf.into_congruence()
    }

    /// Whether every α-block meets every β-block, i.e. α∘β = 1.
    pub fn composes_to_top(&self, other: &Congruence) -> bool {
        let (ka, kb) = (self.num_blocks(), other.num_blocks());
        let mut hit = vec![false; ka * kb];
        for x in 0..self.size() {
            hit[self.block_of(x) * kb + other.block_of(x)] = true;
        }
        hit.into_iter().all(|h| h)
    }

    pub fn is_compatible(&self, q: &QuandleTable) -> bool {
        let n = q.size();
        let blocks = self.blocks();
        let reps: Vec<usize> = blocks.iter().map(|b| b[0]).collect();
        for x in 0..n {
            let rx = reps[self.block_of(x)];
            for y in 0..n {
                let ry = reps[self.block_of(y)];
                if !self.related(q.star(x, y), q.star(rx, ry)) {
                    return false;
                }
            }
        }
        true
    }
}

pub(crate) struct UnionFind {
    parent: Vec<u32>,
}

impl UnionFind {
    pub fn new(n: usize) -> Self {
        UnionFind { parent: (0..n as u32).collect() }
    }

    pub fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] as usize != x {
            let p = self.parent[x] as usize;
            self.parent[x] = self.parent[p];
            x = p;
        }
        x
    }

    /// Returns true when the classes were distinct.
    pub fn union(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        let (lo, hi) = if ra < rb { (ra, rb) } else { (rb, ra) };
        self.parent[hi] = lo as u32;
        true
    }

    pub fn into_congruence(mut self) -> Congruence {
        let roots: Vec<usize> = (0..self.parent.len()).map(|x| self.find(x)).collect();
        Congruence::from_labels(&roots)
    }
}

/// Cg(x, y): least congruence identifying x and y, by union-find closure
/// under z*·, ·*z, z\· and ·\z.
pub fn principal_congruence(q: &QuandleTable, x: usize, y: usize) -> Congruence {
    let n = q.size();
    let mut uf = UnionFind::new(n);
    let mut pending = Vec::new();
    if uf.union(x, y) {
        pending.push((x, y));
    }
    while let Some((a, b)) = pending.pop() {
        for z in 0..n {
            for (u, v) in [
                (q.star(z, a), q.star(z, b)),
                (q.star(a, z), q.star(b, z)),
                (q.ldiv(z, a), q.ldiv(z, b)),
                (q.ldiv(a, z), q.ldiv(b, z)),
            ] {
                if uf.union(u, v) {
                    pending.push((u, v));
                }
            }
        }
    }
    uf.into_congruence()
}
