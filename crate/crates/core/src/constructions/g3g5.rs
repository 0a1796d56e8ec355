//! G₃ ≅ ℤ₂⁴ ⋊ ℤ₃ and G₅ ≅ ℤ₂⁴ ⋊ ℤ₅ from their presentations, with the
//! automorphisms f₃ and f₅ given by generator words.

use super::gk::BuiltQuandle;
use super::ConstructionError;
use crate::grpmodel::{extend_map, fix_subgroup, parse_relators, realizations, Elem, FiniteGroup, GroupMap, Word};
use crate::linfq::{block_diag, companion, F2Poly, FqMatrix};
use crate::quandle::{coset_quandle_full, CosetSpec};

/// One of the two presented groups together with its automorphism words.
#[derive(Clone, Copy, Debug)]
pub struct PresentedPair {
    pub p: u32,
    pub alphabet: &'static str,
    pub relators: &'static str,
    /// Image of each generator, in alphabet order.
    pub images: &'static [&'static str],
}

pub const G3: PresentedPair = PresentedPair {
    p: 3,
    alphabet: "abc",
    relators: "a^3, c^2, b^2, (cb)^2, (ba)^3, (ca)^3, (a^-1cab)^2, (ca^-1ba)^2",
    images: &["a^2ba^-1ba", "ba^-1ca", "bc"],
};

pub const G5: PresentedPair = PresentedPair {
    p: 5,
    alphabet: "ab",
    relators: "a^5, b^2, (ba^-1ba)^2, (ba^-1)^5, (ba^-2ba^2)^2",
    images: &["a^2(a^2b)^2a^-3ba", "ba^2ba^-2"],
};

/// ℤ_p action on ℤ₂⁴ without fixed points: C ⊕ C with C the companion of
/// x² + x + 1 for p = 3, the companion of x⁴ + x³ + x² + x + 1 for p = 5.
pub fn centerless_action(p: u32) -> Result<FqMatrix, ConstructionError> {
    match p {
        3 => {
            let c = companion(F2Poly(0b111))?;
            Ok(block_diag(&[c.clone(), c])?)
        }
        5 => Ok(companion(F2Poly(0b11111))?),
        _ => Err(ConstructionError::Domain(format!("no presented group for p = {p}"))),
    }
}

/// ℤ₂⁴ ⋊_ρ ℤ_p with ρ from [`centerless_action`].
pub fn ambient_group(p: u32) -> Result<FiniteGroup, ConstructionError> {
    let rho = centerless_action(p)?;
    let powers: Vec<FqMatrix> = (0..p as u64).map(|i| rho.pow(i)).collect();
    Ok(FiniteGroup::semidirect(4, 2, &FiniteGroup::cyclic(p as usize), &powers)?)
}

/// A group with its automorphism, realized from a presentation.
#[derive(Clone, Debug)]
pub struct Realized {
    pub group: FiniteGroup,
    /// Images of the presentation generators.
    pub generators: Vec<Elem>,
    pub f: GroupMap,
}

fn realize_with(pair: &PresentedPair, g: &FiniteGroup, gens: Vec<Elem>) -> Result<Realized, ConstructionError> {
    let images: Vec<Elem> = pair
        .images
        .iter()
        .map(|w| Ok(Word::parse(pair.alphabet, w)?.eval(g, &gens)))
        .collect::<Result<_, ConstructionError>>()?;
    let f = extend_map(g, g, &gens, &images)?;
    if !f.is_bijective() {
        return Err(ConstructionError::NotAutomorphism(format!("f_{}", pair.p)));
    }
    Ok(Realized { group: g.clone(), generators: gens, f })
}

/// Up to `limit` realizations of the presentation inside the ambient
/// group, each with its automorphism.
pub fn all_realizations(pair: &PresentedPair, limit: usize) -> Result<Vec<Realized>, ConstructionError> {
    let g = ambient_group(pair.p)?;
    let rels = parse_relators(pair.alphabet, pair.relators)?;
    realizations(&g, pair.alphabet.len(), &rels, limit)?.into_iter().map(|gens| realize_with(pair, &g, gens)).collect()
}

/// The first realization of the presentation inside the ambient group.
pub fn realize(pair: &PresentedPair) -> Result<Realized, ConstructionError> {
    all_realizations(pair, 1)?
        .pop()
        .ok_or_else(|| ConstructionError::Realization(format!("G_{} in ℤ₂⁴ ⋊ ℤ_{}", pair.p, pair.p)))
}

/// 𝒬(G_p, Fix(f_p), f_p) from a realization.
pub fn build_presented_quandle(r: &Realized) -> Result<BuiltQuandle, ConstructionError> {
    let spec = CosetSpec { subgroup: fix_subgroup(&r.group, &r.f), group: r.group.clone(), f: r.f.clone() };
    let coset = coset_quandle_full(&spec)?;
    Ok(BuiltQuandle { spec, coset })
}

/// (G₃, f₃) and (G₅, f₅).
pub fn build_g3_g5() -> Result<[Realized; 2], ConstructionError> {
    Ok([realize(&G3)?, realize(&G5)?])
}
