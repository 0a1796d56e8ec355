//! The families entering Table 1 besides the chain search: Q(p, j), the
//! subdirectly reducible 𝔔(p, j), and the direct products.

use serde::{Deserialize, Serialize};

use super::{ensure, PipelineError};
use crate::conglat::{all_congruences, LatticeShape};
use crate::constructions::{
    build_q4, build_qpj, build_sr, latin16_family, latin_p_family, quaternion_group, GkParams, Twist,
};
use crate::grpmodel::{find_isomorphism, FiniteGroup};
use crate::quandle::{direct_product, dis, quotient, QuandleTable};
use crate::quiso::{are_isomorphic, dedupe};

/// Q(p, 1), Q(p, 2) after checking latin, |Dis| = 8p² and a 3-chain
/// lattice; empty unless p ≡ 1 mod 3.
pub fn lss4p_family(p: u32) -> Result<Vec<QuandleTable>, PipelineError> {
    if p % 3 != 1 {
        return Ok(Vec::new());
    }
    let par = GkParams::new(p)?;
    let mut out = Vec::new();
    for j in [1, 2] {
        let q = build_qpj(par, j)?.coset.table;
        let n = 4 * p as usize;
        ensure(q.size() == n && q.is_latin(), || format!("Q({p},{j}) is not latin of size {n}"))?;
        let d = dis(&q).order();
        ensure(d == 8 * (p as u128).pow(2), || format!("|Dis(Q({p},{j}))| = {d}"))?;
        let lat = all_congruences(&q)?;
        ensure(lat.is_chain() && lat.len() == 3, || format!("Con(Q({p},{j})) is not a 3-chain"))?;
        out.push(q);
    }
    ensure(are_isomorphic(&out[0], &out[1]).is_none(), || format!("Q({p},1) ≅ Q({p},2)"))?;
    Ok(out)
}

/// A member of the subdirectly reducible family with its verified data.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct SrMember {
    pub p: u32,
    pub j: u32,
    #[serde(skip)]
    pub table: Option<QuandleTable>,
    pub shape: LatticeShape,
    pub gamma_quotient: usize,
    pub zeta_quotient: usize,
    pub nu_quotient: usize,
    pub dis_order: u128,
    pub dis_center_order: u128,
    pub dis_center_elementary: bool,
    /// Dis/γ₂(Dis) ≅ 𝒬₈ × ℤ₂².
    pub dis_mod_gamma2_is_q8_klein: bool,
    pub directly_decomposable: bool,
}

/// 𝔔(p, 1) and 𝔔(p, 2), each checked to be latin, subdirectly reducible and
/// directly indecomposable with the diamond lattice; empty unless
/// p ≡ 1 mod 3.
pub fn sr_family(p: u32) -> Result<Vec<SrMember>, PipelineError> {
    if p % 3 != 1 {
        return Ok(Vec::new());
    }
    let par = GkParams::new(p)?;
    let p128 = p as u128;
    let q8_klein = FiniteGroup::direct(&quaternion_group(), &FiniteGroup::vector(2, 2));
    let mut out: Vec<SrMember> = Vec::new();
    for j in [1, 2] {
        let q = build_sr(par, j, Twist::E1)?.coset.table;
        let name = format!("𝔔({p},{j})");
        ensure(q.size() == 16 * p as usize && q.is_latin(), || format!("{name} is not latin of size 16p"))?;
        let lat = all_congruences(&q)?;
        let blocks = |i: Option<usize>| i.map_or(0, |i| lat.get(i).num_blocks());
        let d = dis(&q);
        let center = d.center()?;
        let center_elementary = center.is_abelian() && center.gens().iter().all(|g| g.pow(2).is_identity());
        let lcs = d.lower_central_series();
        let gamma2 = lcs.get(2).cloned().unwrap_or_else(|| lcs.last().unwrap().clone());
        let top = d.coset_action(&gamma2)?;
        let (quot, _) = FiniteGroup::from_perm_group(&top.group)?;
        let member = SrMember {
            p,
            j,
            table: Some(q.clone()),
            shape: lat.shape(),
            gamma_quotient: blocks(lat.gamma),
            zeta_quotient: blocks(lat.zeta),
            nu_quotient: lat.get(lat.nu).num_blocks(),
            dis_order: d.order(),
            dis_center_order: center.order(),
            dis_center_elementary: center_elementary,
            dis_mod_gamma2_is_q8_klein: quot.order() == 32 && find_isomorphism(&quot, &q8_klein).is_some(),
            directly_decomposable: lat.is_directly_decomposable(),
        };
        let diamond = matches!(member.shape, LatticeShape::Diamond { .. });
        ensure(diamond && !lat.is_subdirectly_irreducible(), || format!("{name}: lattice {:?}", member.shape))?;
        ensure(
            member.gamma_quotient == 16 && member.zeta_quotient == 4 * p as usize && member.nu_quotient == 4,
            || {
                format!(
                    "{name}: quotient sizes γ {} ζ {} ν {}",
                    member.gamma_quotient, member.zeta_quotient, member.nu_quotient
                )
            },
        )?;
        ensure(member.dis_order == 32 * p128 * p128, || format!("{name}: |Dis| = {}", member.dis_order))?;
        ensure(member.dis_center_order == 4 && center_elementary, || format!("{name}: Z(Dis) is not ℤ₂²"))?;
        ensure(member.dis_mod_gamma2_is_q8_klein, || format!("{name}: Dis/γ₂ is not 𝒬₈ × ℤ₂²"))?;
        ensure(!member.directly_decomposable, || format!("{name} is directly decomposable"))?;
        out.push(member);
    }
    let (a, b) = (out[0].table.as_ref().unwrap(), out[1].table.as_ref().unwrap());
    ensure(are_isomorphic(a, b).is_none(), || format!("𝔔({p},1) ≅ 𝔔({p},2)"))?;
    Ok(out)
}

/// For j = 1, 2 the j′ with 𝔔(p, j)/ζ ≅ Q(p, j′).
pub fn zeta_quotient_map(p: u32) -> Result<Vec<(u32, u32)>, PipelineError> {
    let lss = lss4p_family(p)?;
    let par = GkParams::new(p)?;
    let mut out = Vec::new();
    for j in [1, 2] {
        let q = build_sr(par, j, Twist::E1)?.coset.table;
        let lat = all_congruences(&q)?;
        let z = lat.zeta.ok_or_else(|| PipelineError::Check(format!("𝔔({p},{j}) has no centre")))?;
        let quot = quotient(&q, &lat.get(z).labels())?;
        let jj = (0..2)
            .find(|&i| are_isomorphic(&quot, &lss[i]).is_some())
            .ok_or_else(|| PipelineError::Check(format!("𝔔({p},{j})/ζ is not a Q({p},j′)")))?;
        out.push((j, jj as u32 + 1));
    }
    Ok(out)
}

/// The a = (0,0) variant of 𝔔(p, j): its table, whether its lattice
/// certifies a direct decomposition, and the j′ with an isomorphism to
/// Q₄ × Q(p, j′).
pub fn decomposition_witness(p: u32, j: u32) -> Result<(QuandleTable, bool, Option<u32>), PipelineError> {
    let par = GkParams::new(p)?;
    let q = build_sr(par, j, Twist::Zero)?.coset.table;
    let dd = all_congruences(&q)?.is_directly_decomposable();
    let q4 = build_q4();
    let mut jj = None;
    for (i, l) in lss4p_family(p)?.iter().enumerate() {
        if are_isomorphic(&q, &direct_product(&q4, l)?).is_some() {
            jj = Some(i as u32 + 1);
        }
    }
    Ok((q, dd, jj))
}

/// Directly decomposable latin quandles of size 16p: the products of the
/// size-16 and size-p inventories and, when p ≡ 1 mod 3, Q₄ × Q(p, j).
/// Returns isomorphism-class representatives.
pub fn dd_assembly(p: u32) -> Result<Vec<QuandleTable>, PipelineError> {
    let mut all = Vec::new();
    let small = latin_p_family(p)?;
    for a in latin16_family() {
        for b in &small {
            all.push(direct_product(&a, b)?);
        }
    }
    let q4 = build_q4();
    for l in lss4p_family(p)? {
        all.push(direct_product(&q4, &l)?);
    }
    let reps = dedupe(&all)?;
    Ok(reps.into_iter().map(|i| all[i].clone()).collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lss_family_exists_only_mod_3() {
        assert_eq!(lss4p_family(7).unwrap().len(), 2);
        assert!(lss4p_family(11).unwrap().is_empty());
        assert!(sr_family(5).unwrap().is_empty());
    }
}
