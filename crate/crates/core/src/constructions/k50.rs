//! The extraspecial group K₅₀ = 𝒬₈ ∘ D₈ of order 32 and the search for a
//! faithful action of it on ℤ_p² whose central element acts as −I.

use std::collections::HashSet;

use rayon::prelude::*;

use super::gk::{q8, quaternion_group};
use super::ConstructionError;
use crate::grpmodel::{parse_relators, realize_presentation, Elem, FiniteGroup, Subgroup, Word};

pub const K50_ALPHABET: &str = "abcd";
pub const K50_RELATORS: &str = "a^2, b^4, c^4d^2, cbcb^-1, db^-1db, c^-1aca, dc^-1dc, dadb^2a";

/// Largest prime accepted by [`k50_no_centerless_rep`].
pub const K50_SEARCH_CAP: u32 = 11;

/// D₈ with r^i s^e stored at i + 4e.
pub fn dihedral8() -> FiniteGroup {
    let mul = (0..64u32)
        .map(|t| {
            let (x, y) = (t / 8, t % 8);
            let (i1, e1, i2, e2) = (x % 4, x / 4, y % 4, y / 4);
            let i = if e1 == 0 { i1 + i2 } else { i1 + 4 - i2 } % 4;
            i + 4 * ((e1 + e2) % 2)
        })
        .collect();
    FiniteGroup::from_table(8, mul).expect("dihedral table")
}

/// 𝒬₈ ∘ D₈: 𝒬₈ × D₈ modulo the diagonal copy of (−1, r²).
pub fn central_product() -> Result<FiniteGroup, ConstructionError> {
    let d = FiniteGroup::direct(&quaternion_group(), &dihedral8());
    let glue = d.pair(q8::MINUS_ONE, 2);
    let (k, _) = d.quotient(&Subgroup::from_members(vec![0, glue]))?;
    Ok(k)
}

/// K₅₀ realized from its presentation, checked to have order 32 with
/// Z(K) = [K, K] of order 2.
pub fn build_k50() -> Result<(FiniteGroup, Vec<Elem>), ConstructionError> {
    let k = central_product()?;
    let rels = parse_relators(K50_ALPHABET, K50_RELATORS)?;
    let gens =
        realize_presentation(&k, 4, &rels)?.ok_or_else(|| ConstructionError::Realization("K50 in Q8 ∘ D8".into()))?;
    let center = k.center();
    let derived = k.derived_subgroup();
    if k.order() != 32 || center.order() != 2 || center != derived {
        return Err(ConstructionError::Realization("K50 is not extraspecial of order 32".into()));
    }
    Ok((k, gens))
}

type M2 = [u32; 4];

fn mmul(p: u32, a: &M2, b: &M2) -> M2 {
    let p = p as u64;
    let e = |x: u32, y: u32, z: u32, w: u32| ((x as u64 * y as u64 + z as u64 * w as u64) % p) as u32;
    [e(a[0], b[0], a[1], b[2]), e(a[0], b[1], a[1], b[3]), e(a[2], b[0], a[3], b[2]), e(a[2], b[1], a[3], b[3])]
}

fn minv(p: u32, a: &M2) -> M2 {
    let det = (a[0] as u64 * a[3] as u64 + (p as u64 - a[1] as u64) * a[2] as u64) % p as u64;
    let d = crate::linfq::inv_mod(det as u32, p);
    let s = |x: u32| ((x as u64 * d as u64) % p as u64) as u32;
    [s(a[3]), s((p - a[1]) % p), s((p - a[2]) % p), s(a[0])]
}

fn mpow(p: u32, a: &M2, e: i64) -> M2 {
    let base = if e < 0 { minv(p, a) } else { *a };
    let mut acc = [1, 0, 0, 1];
    for _ in 0..e.unsigned_abs() {
        acc = mmul(p, &acc, &base);
    }
    acc
}

fn eval(p: u32, w: &Word, assign: &[M2]) -> M2 {
    w.0.iter().fold([1, 0, 0, 1], |acc, &(s, e)| mmul(p, &acc, &mpow(p, &assign[s], e)))
}

/// Order of the matrix group generated by `gens`, counted up to `cap + 1`.
fn generated_order(p: u32, gens: &[M2], cap: usize) -> usize {
    let mut seen: HashSet<M2> = HashSet::from([[1, 0, 0, 1]]);
    let mut queue = vec![[1, 0, 0, 1]];
    let mut head = 0;
    while head < queue.len() && seen.len() <= cap {
        let x = queue[head];
        head += 1;
        for g in gens {
            let y = mmul(p, &x, g);
            if seen.insert(y) {
                queue.push(y);
            }
        }
    }
    seen.len()
}

/// All faithful ρ: K₅₀ → GL₂(p) with ρ(b²) = −I, as matrices for the
/// generators a, b, c, d.
///
/// Assignment order is b, c, d, a; every relator is checked as soon as its
/// symbols are assigned.
pub fn k50_centerless_reps(p: u32) -> Result<Vec<[M2; 4]>, ConstructionError> {
    if !crate::util::is_prime(p) || p == 2 {
        return Err(ConstructionError::Domain(format!("need an odd prime, got {p}")));
    }
    if p > K50_SEARCH_CAP {
        return Err(ConstructionError::Capacity(format!("K50 search at p = {p}")));
    }
    let rels = parse_relators(K50_ALPHABET, K50_RELATORS)?;
    // Search order b, c, d, a = symbols 1, 2, 3, 0.
    let order = [1usize, 2, 3, 0];
    let rank = |s: usize| order.iter().position(|&t| t == s).unwrap();
    let mut by_level: Vec<Vec<Word>> = vec![Vec::new(); 4];
    for r in rels {
        let level = r.0.iter().map(|&(s, _)| rank(s)).max().unwrap_or(0);
        by_level[level].push(r);
    }
    let gl: Vec<M2> = (0..p.pow(4))
        .map(|i| [i % p, i / p % p, i / p / p % p, i / p / p / p])
        .filter(|m| !(m[0] as u64 * m[3] as u64 + (p * p) as u64 - m[1] as u64 * m[2] as u64).is_multiple_of(p as u64))
        .collect();
    let minus = [p - 1, 0, 0, p - 1];
    let bs: Vec<M2> = gl.iter().copied().filter(|b| mmul(p, b, b) == minus).collect();
    let found: Vec<[M2; 4]> = bs
        .par_iter()
        .flat_map_iter(|&b| {
            let mut out = Vec::new();
            let mut assign = [[1, 0, 0, 1]; 4];
            assign[1] = b;
            extend(p, &gl, &order, &by_level, 1, &mut assign, &mut out);
            out
        })
        .collect();
    Ok(found)
}

fn extend(
    p: u32,
    gl: &[M2],
    order: &[usize; 4],
    by_level: &[Vec<Word>],
    level: usize,
    assign: &mut [M2; 4],
    out: &mut Vec<[M2; 4]>,
) {
    let id = [1, 0, 0, 1];
    if !by_level[level - 1].iter().all(|r| eval(p, r, assign) == id) {
        return;
    }
    if level == 4 {
        if generated_order(p, assign, 32) == 32 {
            out.push(*assign);
        }
        return;
    }
    for &m in gl {
        assign[order[level]] = m;
        extend(p, gl, order, by_level, level + 1, assign, out);
    }
}

/// True iff K₅₀ has no faithful action on ℤ_p² with ρ(b²) = −I.
pub fn k50_no_centerless_rep(p: u32) -> Result<bool, ConstructionError> {
    Ok(k50_centerless_reps(p)?.is_empty())
}
