use super::{QuandleError, QuandleTable};
use crate::grpmodel::{Elem, FiniteGroup, GroupMap, Subgroup};
use crate::linfq::{index_to_vec, vec_to_index, FqMatrix};

/// Data of a coset quandle 𝒬(G, H, f): xH * yH = x f(x⁻¹y) H.
#[derive(Clone, Debug)]
pub struct CosetSpec {
    pub group: FiniteGroup,
    pub subgroup: Subgroup,
    pub f: GroupMap,
}

/// Coset quandle together with its coset bookkeeping.
#[derive(Clone, Debug)]
pub struct CosetQuandle {
    pub table: QuandleTable,
    /// Representative of each coset, the least element in it.
    pub reps: Vec<Elem>,
    /// Coset index of every group element.
    pub coset_of: Vec<u32>,
}

/// Aff(Z_p^t, f): x * y = (I − f)x + f y, with f invertible.
pub fn affine(f: &FqMatrix) -> Result<QuandleTable, QuandleError> {
    if !f.is_invertible() {
        return Err(QuandleError::Singular);
    }
    let rows: Vec<Vec<u32>> = f.to_rows();
    affine_zm(f.p(), &rows)
}

/// Aff(Z_m^t, f) for an integer matrix f invertible mod m.
pub fn affine_zm(m: u32, f: &[Vec<u32>]) -> Result<QuandleTable, QuandleError> {
    let t = f.len();
    if f.iter().any(|r| r.len() != t) {
        return Err(QuandleError::Size(t));
    }
    let n =
        (m as usize).checked_pow(t as u32).filter(|&n| n <= u16::MAX as usize).ok_or(QuandleError::Size(usize::MAX))?;
    let apply = |a: &[Vec<u32>], v: &[u32]| -> Vec<u32> {
        a.iter()
            .map(|row| (row.iter().zip(v).map(|(x, y)| (*x as u64) * (*y as u64)).sum::<u64>() % m as u64) as u32)
            .collect()
    };
    // f is invertible mod m iff it permutes Z_m^t.
    let mut hit = vec![false; n];
    for x in 0..n {
        let y = vec_to_index(m, &apply(f, &index_to_vec(m, t, x)));
        if hit[y] {
            return Err(QuandleError::Singular);
        }
        hit[y] = true;
    }
    let one_minus: Vec<Vec<u32>> =
        (0..t).map(|i| (0..t).map(|j| ((if i == j { 1 } else { 0 }) + m - f[i][j] % m) % m).collect()).collect();
    let fx: Vec<Vec<u32>> = (0..n).map(|y| apply(f, &index_to_vec(m, t, y))).collect();
    let gx: Vec<Vec<u32>> = (0..n).map(|x| apply(&one_minus, &index_to_vec(m, t, x))).collect();
    let mut star = vec![0u16; n * n];
    for x in 0..n {
        for y in 0..n {
            let s: Vec<u32> = gx[x].iter().zip(&fx[y]).map(|(a, b)| (a + b) % m).collect();
            star[x * n + y] = vec_to_index(m, &s) as u16;
        }
    }
    QuandleTable::from_trusted(n, star)
}

/// 𝒬(G, H, f), refusing with a witness h ∈ H \ Fix(f).
pub fn coset_quandle(spec: &CosetSpec) -> Result<QuandleTable, QuandleError> {
    Ok(coset_quandle_full(spec)?.table)
}

pub fn coset_quandle_full(spec: &CosetSpec) -> Result<CosetQuandle, QuandleError> {
    let g = &spec.group;
    if let Some(&h) = spec.subgroup.members().iter().find(|&&h| spec.f.apply(h) != h) {
        return Err(QuandleError::NotFixed { witness: h });
    }
    let mut coset_of = vec![u32::MAX; g.order()];
    let mut reps = Vec::new();
    for x in 0..g.order() as Elem {
        if coset_of[x as usize] != u32::MAX {
            continue;
        }
        let c = reps.len() as u32;
        reps.push(x);
        for &h in spec.subgroup.members() {
            coset_of[g.mul(x, h) as usize] = c;
        }
    }
    let n = reps.len();
    if n > u16::MAX as usize {
        return Err(QuandleError::Size(n));
    }
    let inv_reps: Vec<Elem> = reps.iter().map(|&x| g.inv(x)).collect();
    let mut star = vec![0u16; n * n];
    for a in 0..n {
        for b in 0..n {
            let z = g.mul(reps[a], spec.f.apply(g.mul(inv_reps[a], reps[b])));
            star[a * n + b] = coset_of[z as usize] as u16;
        }
    }
    let table = QuandleTable::from_trusted(n, star)?;
    Ok(CosetQuandle { table, reps, coset_of })
}

/// Q1 × Q2 with (a, b) stored at a·|Q2| + b.
pub fn direct_product(a: &QuandleTable, b: &QuandleTable) -> Result<QuandleTable, QuandleError> {
    let (na, nb) = (a.size(), b.size());
    let n = na * nb;
    if n > u16::MAX as usize {
        return Err(QuandleError::Size(n));
    }
    let mut star = vec![0u16; n * n];
    for x in 0..n {
        let (x1, x2) = (x / nb, x % nb);
        for y in 0..n {
            let (y1, y2) = (y / nb, y % nb);
            star[x * n + y] = (a.star(x1, y1) * nb + b.star(x2, y2)) as u16;
        }
    }
    QuandleTable::from_trusted(n, star)
}

/// Q/α for a partition given by block labels; fails unless α is a congruence.
pub fn quotient(q: &QuandleTable, blocks: &[usize]) -> Result<QuandleTable, QuandleError> {
    let n = q.size();
    if blocks.len() != n {
        return Err(QuandleError::Size(blocks.len()));
    }
    // Relabel blocks 0..k in order of first appearance.
    let mut relabel = std::collections::HashMap::new();
    let lab: Vec<usize> = blocks
        .iter()
        .map(|b| {
            let k = relabel.len();
            *relabel.entry(*b).or_insert(k)
        })
        .collect();
    let k = relabel.len();
    let mut rep = vec![usize::MAX; k];
    for (x, &b) in lab.iter().enumerate() {
        if rep[b] == usize::MAX {
            rep[b] = x;
        }
    }
    let mut star = vec![0u16; k * k];
    for x in 0..n {
        for y in 0..n {
            let v = lab[q.star(x, y)];
            let slot = &mut star[lab[x] * k + lab[y]];
            if x == rep[lab[x]] && y == rep[lab[y]] {
                *slot = v as u16;
            }
        }
    }
    for x in 0..n {
        for y in 0..n {
            if star[lab[x] * k + lab[y]] as usize != lab[q.star(x, y)] {
                return Err(QuandleError::NotCongruence);
            }
        }
    }
    QuandleTable::from_trusted(k, star)
}
