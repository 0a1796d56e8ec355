use std::collections::HashSet;
use std::fmt::Write as _;

use rayon::prelude::*;

use super::congruence::{principal_congruence, Congruence};
use super::galois;
use super::ConglatError;
use crate::quandle::{cayley_kernel, QuandleTable};

/// Largest carrier accepted by [`all_congruences`].
pub const LATTICE_SIZE_CAP: usize = 2500;
/// Non-connected quandles are handled by the all-pairs closure up to this size.
pub const ALL_PAIRS_CAP: usize = 64;
/// Largest number of congruences materialized.
pub const CONGRUENCE_COUNT_CAP: usize = 20_000;

/// Con(Q) with its distinguished elements.
#[derive(Clone, Debug)]
pub struct CongruenceLattice {
    /// Sorted finest first, then by labels; index 0 is 0_Q, the last is 1_Q.
    pub elements: Vec<Congruence>,
    /// Covering pairs (lower, upper).
    pub covers: Vec<(usize, usize)>,
    pub lambda: usize,
    /// γ_Q, known for connected quandles.
    pub gamma: Option<usize>,
    /// ζ_Q, known for latin quandles.
    pub zeta: Option<usize>,
    pub mu: usize,
    pub nu: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
pub enum LatticeShape {
    /// Totally ordered; |Q/α| listed from 0_Q upwards.
    Chain {
        quotient_sizes: Vec<usize>,
    },
    /// 0 < two incomparable atoms < ν < 1; atom quotient sizes sorted
    /// descending.
    Diamond {
        atom_quotient_sizes: [usize; 2],
        nu_quotient_size: usize,
    },
    Other {
        size: usize,
        height: usize,
    },
}

impl LatticeShape {
    pub fn tag(&self) -> String {
        match self {
            LatticeShape::Chain { quotient_sizes } => format!("chain-{}", quotient_sizes.len()),
            LatticeShape::Diamond { .. } => "diamond".into(),
            LatticeShape::Other { size, height } => format!("other-{size}-h{height}"),
        }
    }
}

/// Every congruence of Q.
///
/// Connected quandles use the principal congruences Cg(0, y) closed under
/// joins; other quandles up to [`ALL_PAIRS_CAP`] elements use all pairs.
pub fn all_congruences(q: &QuandleTable) -> Result<CongruenceLattice, ConglatError> {
    let n = q.size();
    if n > LATTICE_SIZE_CAP {
        return Err(ConglatError::Capacity(format!("congruence lattice of a quandle of size {n}")));
    }
    let principals = if q.is_connected() {
        principal_from(q, 0)
    } else if n <= ALL_PAIRS_CAP {
        all_pairs_principals(q)
    } else {
        return Err(ConglatError::Capacity(format!("non-connected quandle of size {n}")));
    };
    let elements = join_closure(n, principals)?;
    CongruenceLattice::from_elements(q, elements)
}

/// Oracle: join closure of Cg(x, y) over all pairs.
pub fn all_congruences_all_pairs(q: &QuandleTable) -> Result<Vec<Congruence>, ConglatError> {
    let mut els = join_closure(q.size(), all_pairs_principals(q))?;
    sort_congruences(&mut els);
    Ok(els)
}

fn principal_from(q: &QuandleTable, x0: usize) -> Vec<Congruence> {
    let mut out: Vec<Congruence> = (0..q.size()).into_par_iter().map(|y| principal_congruence(q, x0, y)).collect();
    out.sort();
    out.dedup();
    out
}

fn all_pairs_principals(q: &QuandleTable) -> Vec<Congruence> {
    let n = q.size();
    let mut out = HashSet::new();
    out.insert(Congruence::bottom(n));
    for x in 0..n {
        for y in x + 1..n {
            out.insert(principal_congruence(q, x, y));
        }
    }
    out.into_iter().collect()
}

fn join_closure(n: usize, seeds: Vec<Congruence>) -> Result<Vec<Congruence>, ConglatError> {
    let mut set: HashSet<Congruence> = HashSet::new();
    set.insert(Congruence::bottom(n));
    let mut list: Vec<Congruence> = vec![Congruence::bottom(n)];
    for s in seeds {
        if set.insert(s.clone()) {
            list.push(s);
        }
    }
    let gens = list.clone();
    let mut i = 0;
    while i < list.len() {
        for g in &gens {
            let j = list[i].join(g);
            if set.insert(j.clone()) {
                list.push(j);
                if list.len() > CONGRUENCE_COUNT_CAP {
                    return Err(ConglatError::Capacity(format!("more than {CONGRUENCE_COUNT_CAP} congruences")));
                }
            }
        }
        i += 1;
    }
    Ok(list)
}

fn sort_congruences(els: &mut [Congruence]) {
    els.sort_by(|a, b| b.num_blocks().cmp(&a.num_blocks()).then_with(|| a.cmp(b)));
}

impl CongruenceLattice {
    fn from_elements(q: &QuandleTable, mut elements: Vec<Congruence>) -> Result<Self, ConglatError> {
        let n = q.size();
        sort_congruences(&mut elements);
        let m = elements.len();
        let index_of = |c: &Congruence| elements.iter().position(|e| e == c);
        let le: Vec<Vec<bool>> = (0..m).map(|i| (0..m).map(|j| elements[i].leq(&elements[j])).collect()).collect();
        let mut covers = Vec::new();
        for i in 0..m {
            for j in 0..m {
                if i != j && le[i][j] && !(0..m).any(|k| k != i && k != j && le[i][k] && le[k][j]) {
                    covers.push((i, j));
                }
            }
        }
        let top = m - 1;
        let atoms: Vec<usize> = covers.iter().filter(|c| c.0 == 0).map(|c| c.1).collect();
        let coatoms: Vec<usize> = covers.iter().filter(|c| c.1 == top).map(|c| c.0).collect();
        let nu_c = atoms.iter().fold(Congruence::bottom(n), |acc, &a| acc.join(&elements[a]));
        let mu_c = if coatoms.is_empty() {
            Congruence::bottom(n)
        } else {
            coatoms.iter().skip(1).fold(elements[coatoms[0]].clone(), |acc, &a| acc.meet(&elements[a]))
        };
        let lambda_c = Congruence::from_labels(&cayley_kernel(q));
        let missing = || ConglatError::Inconsistent("derived congruence missing from the lattice".into());
        let lambda = index_of(&lambda_c).ok_or_else(missing)?;
        let nu = index_of(&nu_c).ok_or_else(missing)?;
        let mu = index_of(&mu_c).ok_or_else(missing)?;
        let gamma = if q.is_connected() { Some(index_of(&galois::gamma(q)?).ok_or_else(missing)?) } else { None };
        let zeta = if q.is_latin() { Some(index_of(&galois::zeta(q)?).ok_or_else(missing)?) } else { None };
        Ok(CongruenceLattice { elements, covers, lambda, gamma, zeta, mu, nu })
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn bottom(&self) -> &Congruence {
        &self.elements[0]
    }

    pub fn top(&self) -> &Congruence {
        self.elements.last().unwrap()
    }

    pub fn get(&self, i: usize) -> &Congruence {
        &self.elements[i]
    }

    pub fn index_of(&self, c: &Congruence) -> Option<usize> {
        self.elements.iter().position(|e| e == c)
    }

    pub fn atoms(&self) -> Vec<usize> {
        self.covers.iter().filter(|c| c.0 == 0).map(|c| c.1).collect()
    }

    pub fn coatoms(&self) -> Vec<usize> {
        let top = self.len() - 1;
        self.covers.iter().filter(|c| c.1 == top).map(|c| c.0).collect()
    }

    /// Number of elements in a longest chain.
    pub fn height(&self) -> usize {
        let m = self.len();
        // Elements are sorted finest first, so every cover goes forward.
        let mut best = vec![1usize; m];
        for j in 0..m {
            for &(a, b) in &self.covers {
                if b == j {
                    best[j] = best[j].max(best[a] + 1);
                }
            }
        }
        best[m - 1]
    }

    /// Exactly one atom.
    pub fn is_subdirectly_irreducible(&self) -> bool {
        self.atoms().len() == 1
    }

    /// A pair α, β of proper nontrivial congruences with α ∧ β = 0 and α∘β = 1.
    pub fn decomposition(&self) -> Option<(usize, usize)> {
        let m = self.len();
        for a in 1..m.saturating_sub(1) {
            for b in a + 1..m - 1 {
                let (x, y) = (&self.elements[a], &self.elements[b]);
                if x.meet(y).is_bottom() && x.composes_to_top(y) {
                    return Some((a, b));
                }
            }
        }
        None
    }

    pub fn is_directly_decomposable(&self) -> bool {
        self.decomposition().is_some()
    }

    pub fn is_chain(&self) -> bool {
        (0..self.len()).all(|i| (i + 1..self.len()).all(|j| self.elements[i].leq(&self.elements[j])))
    }

    pub fn shape(&self) -> LatticeShape {
        let blocks = |i: usize| self.elements[i].num_blocks();
        if self.is_chain() {
            return LatticeShape::Chain { quotient_sizes: (0..self.len()).map(blocks).collect() };
        }
        let atoms = self.atoms();
        if self.len() == 5 && atoms.len() == 2 && self.coatoms() == vec![self.nu] && !atoms.contains(&self.nu) {
            let mut sizes = [blocks(atoms[0]), blocks(atoms[1])];
            sizes.sort_unstable_by(|a, b| b.cmp(a));
            return LatticeShape::Diamond { atom_quotient_sizes: sizes, nu_quotient_size: blocks(self.nu) };
        }
        LatticeShape::Other { size: self.len(), height: self.height() }
    }

    /// Hasse diagram in DOT, one node per congruence.
    pub fn to_dot(&self) -> String {
        let mut out = String::from("digraph congruences {\n  rankdir=BT;\n");
        for (i, c) in self.elements.iter().enumerate() {
            let mut names = Vec::new();
            if i == 0 {
                names.push("0");
            }
            if i == self.len() - 1 {
                names.push("1");
            }
            if self.gamma == Some(i) {
                names.push("gamma");
            }
            if self.zeta == Some(i) {
                names.push("zeta");
            }
            let prefix = if names.is_empty() { String::new() } else { format!("{}\\n", names.join(",")) };
            let _ = writeln!(
                out,
                "  c{i} [label=\"{prefix}|Q/α| = {}, blocks = {}\"];",
                c.num_blocks(),
                c.size() / c.num_blocks().max(1)
            );
        }
        for &(a, b) in &self.covers {
            let _ = writeln!(out, "  c{a} -> c{b};");
        }
        out.push_str("}\n");
        out
    }
}
