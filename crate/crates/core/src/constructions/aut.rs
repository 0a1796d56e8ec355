//! Automorphisms of 𝒢ₖ and of 𝒢ₖ × ℤ₂², and the families 𝓕 and 𝓗 used
//! to count isomorphism classes of 𝔔(p, j).

use rayon::prelude::*;

use super::gk::{q8, GkParams};
use super::ConstructionError;
use crate::grpmodel::{cayley_words, fix_subgroup, Elem, FiniteGroup, GroupMap};
use crate::linfq::{index_to_vec, vec_to_index, FqMatrix};
use crate::permgrp::{PermGroup, Permutation};

/// Generators x, y, e₁ of 𝒢ₖ.
pub fn gk_generators(par: GkParams) -> [Elem; 3] {
    let nv = par.p * par.p;
    [nv * q8::I, nv * q8::J, 1]
}

/// Whether images (x′, y′, e₁′) satisfy the defining relations of 𝒢ₖ:
/// x⁴ = 1, x² = y², [x, y] = x², and with e₂ = x e₁ x⁻¹,
/// x e₂ x⁻¹ = e₁⁻¹, y e₁ y⁻¹ = e₁^{k²} e₂^k, y e₂ y⁻¹ = e₁^k e₂^{−k²}.
///
/// e₁′ of order p generates together with e₂′ an abelian normal subgroup, so
/// these relations present a group of order at most 8p².
pub fn satisfies_gk_relations(par: GkParams, g: &FiniteGroup, x: Elem, y: Elem, e1: Elem) -> bool {
    let (k, k2) = (par.k as i64, (par.k as i64 * par.k as i64) % par.p as i64);
    let x2 = g.mul(x, x);
    if g.mul(x2, x2) != 0 || x2 != g.mul(y, y) || g.commutator(x, y) != x2 {
        return false;
    }
    if g.pow(e1, par.p as i64) != 0 || e1 == 0 {
        return false;
    }
    let e2 = g.conjugate(x, e1);
    g.commutator(e1, e2) == 0
        && g.conjugate(x, e2) == g.inv(e1)
        && g.conjugate(y, e1) == g.mul(g.pow(e1, k2), g.pow(e2, k))
        && g.conjugate(y, e2) == g.mul(g.pow(e1, k), g.pow(e2, -k2))
}

/// Every automorphism of 𝒢ₖ, enumerated by images of x, y, e₁ that satisfy
/// the defining relations and generate.
pub fn aut_gk(par: GkParams, g: &FiniteGroup) -> Result<Vec<GroupMap>, ConstructionError> {
    let gens = gk_generators(par);
    let words = cayley_words(g, &gens)?;
    let nv = (par.p * par.p) as Elem;
    // Elements outside ℤ_p² ⋊ {±1} have order 4; elements of order p lie in ℤ_p².
    let order4: Vec<Elem> = (0..g.order() as Elem).filter(|&e| !(e / nv).is_multiple_of(4)).collect();
    let order_p: Vec<Elem> = (1..nv).collect();
    let found: Vec<[Elem; 3]> = order4
        .par_iter()
        .flat_map_iter(|&x| {
            let mut out = Vec::new();
            for &y in &order4 {
                for &e1 in &order_p {
                    if satisfies_gk_relations(par, g, x, y, e1) && g.closure(&[x, y, e1]).order() == g.order() {
                        out.push([x, y, e1]);
                    }
                }
            }
            out
        })
        .collect();
    Ok(found
        .into_iter()
        .map(|images| {
            let mut out = vec![0; g.order()];
            for &e in words.order.iter().skip(1) {
                let p = words.parent[e as usize];
                out[e as usize] = g.mul(out[p as usize], images[words.gen[e as usize] as usize]);
            }
            GroupMap::from_images(out)
        })
        .collect())
}

/// 𝓕 = {h ∈ Aut(𝒢ₖ) : |h| = 3, |Fix(h)| = 2p}.
pub fn in_family_f(par: GkParams, g: &FiniteGroup, h: &GroupMap) -> bool {
    h.order() == 3 && fix_subgroup(g, h).order() == 2 * par.p as usize
}

fn as_perm(h: &GroupMap) -> Permutation {
    let images: Vec<usize> = h.images().iter().map(|&x| x as usize).collect();
    Permutation::from_images(&images).expect("automorphisms are bijective")
}

/// Greedy generating set of the group formed by `maps`, which must be
/// closed under composition.
pub fn generating_maps(maps: &[GroupMap]) -> Result<Vec<GroupMap>, ConstructionError> {
    let degree = maps.first().map_or(0, |m| m.images().len());
    let mut gens: Vec<GroupMap> = Vec::new();
    let mut group = PermGroup::trivial(degree);
    for m in maps {
        let perm = as_perm(m);
        if !group.contains(&perm) {
            gens.push(m.clone());
            group = PermGroup::closure(degree, &gens.iter().map(as_perm).collect::<Vec<_>>())
                .map_err(|e| ConstructionError::Capacity(e.to_string()))?;
        }
        if group.order() == maps.len() as u128 {
            break;
        }
    }
    Ok(gens)
}

/// Order of the permutation group generated by automorphisms.
pub fn generated_order(maps: &[GroupMap]) -> Result<u128, ConstructionError> {
    let degree = maps.first().map_or(0, |m| m.images().len());
    let perms: Vec<Permutation> = maps.iter().map(as_perm).collect();
    Ok(PermGroup::closure(degree, &perms).map_err(|e| ConstructionError::Capacity(e.to_string()))?.order())
}

/// The homomorphism 𝒢ₖ → ℤ₂² with x ↦ χ_x, y ↦ χ_y, evaluated through
/// the ℤ₂² quotient of 𝒬₈.
pub fn klein_character(par: GkParams, chi: [u32; 2], h: Elem) -> u32 {
    let class = q8::klein_class(h / (par.p * par.p));
    (if class & 1 == 1 { chi[0] } else { 0 }) ^ (if class & 2 == 2 { chi[1] } else { 0 })
}

/// (h, w) ↦ (f(h), χ(h) + F w) on 𝒢ₖ × ℤ₂².
pub fn lift_aut(par: GkParams, gz: &FiniteGroup, f: &GroupMap, chi: [u32; 2], m: &FqMatrix) -> GroupMap {
    let ngk = f.images().len() as Elem;
    GroupMap::from_fn(gz, |e| {
        let (h, w) = (e % ngk, e / ngk);
        let fw = vec_to_index(2, &m.mul_vec(&index_to_vec(2, 2, w as usize))) as Elem;
        f.apply(h) + ngk * (klein_character(par, chi, h) ^ fw)
    })
}

/// The six elements of GL₂(2).
pub fn gl22() -> Vec<FqMatrix> {
    (0..16u32)
        .map(|b| FqMatrix::from_fn(2, 2, 2, |r, c| (b >> (2 * r + c)) & 1))
        .filter(FqMatrix::is_invertible)
        .collect()
}

/// Generators of Aut(𝒢ₖ × ℤ₂²): lifts of generators of Aut(𝒢ₖ), the four
/// elementary characters, and GL₂(2) acting on the centre.
pub fn aut_gk_klein_generators(par: GkParams, gz: &FiniteGroup, aut_gens: &[GroupMap]) -> Vec<GroupMap> {
    let id_gk = GroupMap::from_images((0..(gz.order() / 4) as Elem).collect());
    let id2 = FqMatrix::identity(2, 2);
    let mut out: Vec<GroupMap> = aut_gens.iter().map(|f| lift_aut(par, gz, f, [0, 0], &id2)).collect();
    for chi in [[1, 0], [2, 0], [0, 1], [0, 2]] {
        out.push(lift_aut(par, gz, &id_gk, chi, &id2));
    }
    for m in [FqMatrix::from_rows(2, &[vec![0, 1], vec![1, 0]]), FqMatrix::from_rows(2, &[vec![1, 1], vec![0, 1]])] {
        out.push(lift_aut(par, gz, &id_gk, [0, 0], &m));
    }
    out
}

/// 𝓗 membership for h ∈ Aut(𝒢ₖ × ℤ₂²): the induced map on the quotient by
/// the centre 1 × ℤ₂² lies in 𝓕 and h restricted to the centre has order 3.
pub fn in_family_h(par: GkParams, gk: &FiniteGroup, h: &GroupMap) -> bool {
    let ngk = gk.order() as Elem;
    let induced = GroupMap::from_images((0..ngk).map(|x| h.apply(x) % ngk).collect());
    let on_center: Vec<Elem> = (0..4).map(|w| h.apply(ngk * w) / ngk).collect();
    let center_order = (1..=6).find(|&e| (0..4).all(|w| (0..e).fold(w, |acc, _| on_center[acc as usize]) == w));
    center_order == Some(3) && in_family_f(par, gk, &induced)
}

/// 𝓗 built from its parametrization 𝓕 × Hom(𝒢ₖ, ℤ₂²) × {F ∈ GL₂(2) : |F| = 3}.
pub fn family_h(par: GkParams, gz: &FiniteGroup, family_f: &[GroupMap]) -> Vec<GroupMap> {
    let order3: Vec<FqMatrix> = gl22().into_iter().filter(|m| !m.is_identity() && m.pow(3).is_identity()).collect();
    let mut out = Vec::new();
    for f in family_f {
        for c in 0..16u32 {
            for m in &order3 {
                out.push(lift_aut(par, gz, f, [c % 4, c / 4], m));
            }
        }
    }
    out
}
