use std::collections::HashSet;

use super::QuisoError;
use crate::grpmodel::{Elem, FiniteGroup, GroupMap};

/// Whether ⟨g f(g)⁻¹ : g ∈ G⟩ = G, the condition under which the coset
/// quandle 𝒬(G, Fix(f), f) has displacement group G.
pub fn displacement_generates(g: &FiniteGroup, f: &GroupMap) -> bool {
    let seeds: Vec<Elem> = (0..g.order() as Elem).map(|x| g.mul(x, g.inv(f.apply(x)))).collect();
    g.closure(&seeds).order() == g.order()
}

/// Orbit of f under conjugation h f h⁻¹ by the group generated by `family`.
pub fn conjugacy_orbit(f: &GroupMap, family: &[GroupMap]) -> Vec<GroupMap> {
    let inverses: Vec<GroupMap> = family.iter().map(|h| h.inverse().expect("automorphism")).collect();
    let mut seen: HashSet<Vec<Elem>> = HashSet::new();
    seen.insert(f.images().to_vec());
    let mut orbit = vec![f.clone()];
    let mut i = 0;
    while i < orbit.len() {
        for (h, h_inv) in family.iter().zip(&inverses) {
            let c = h.compose(&orbit[i]).compose(h_inv);
            if seen.insert(c.images().to_vec()) {
                orbit.push(c);
            }
        }
        i += 1;
    }
    orbit
}

/// Decides whether f₁ and f₂ are conjugate under the group generated by
/// `family`; refuses unless both satisfy [`displacement_generates`].
pub fn iso_via_conjugacy(
    g: &FiniteGroup,
    f1: &GroupMap,
    f2: &GroupMap,
    family: &[GroupMap],
) -> Result<bool, QuisoError> {
    for f in [f1, f2] {
        if !displacement_generates(g, f) {
            return Err(QuisoError::NotMinimal);
        }
    }
    if f1.order() != f2.order() {
        return Ok(false);
    }
    let target = f2.images();
    Ok(conjugacy_orbit(f1, family).iter().any(|c| c.images() == target))
}
