//! The operators between congruences and normal subgroups of LMlt(Q):
//! α ↦ Dis_α, Dis^α and N ↦ 𝒪_N, c_N, plus the commutator criteria built
//! on them.

use super::congruence::Congruence;
use super::ConglatError;
use crate::permgrp::{PermGroup, Permutation};
use crate::quandle::{dis, QuandleTable};

fn check_size(q: &QuandleTable, alpha: &Congruence) -> Result<(), ConglatError> {
    if alpha.size() != q.size() {
        return Err(ConglatError::SizeMismatch { expected: q.size(), got: alpha.size() });
    }
    Ok(())
}

/// Dis_α = ⟨L_x L_y⁻¹ : x α y⟩.
pub fn dis_alpha(q: &QuandleTable, alpha: &Congruence) -> Result<PermGroup, ConglatError> {
    check_size(q, alpha)?;
    let mut gens = Vec::new();
    for block in alpha.blocks() {
        let r_inv = q.left_translation(block[0]).inverse();
        for &x in &block[1..] {
            gens.push(q.left_translation(x).compose(&r_inv));
        }
    }
    Ok(PermGroup::closure(q.size(), &gens)?)
}

/// Dis^α = Dis(Q) ∩ LMlt^α, the displacements fixing every α-block.
pub fn dis_sup_alpha(q: &QuandleTable, alpha: &Congruence) -> Result<PermGroup, ConglatError> {
    check_size(q, alpha)?;
    Ok(dis(q).block_action_kernel(&alpha.labels())?)
}

fn check_normal(q: &QuandleTable, n: &PermGroup) -> Result<(), ConglatError> {
    if n.degree() != q.size() {
        return Err(ConglatError::SizeMismatch { expected: q.size(), got: n.degree() });
    }
    let gens: Vec<Permutation> = (0..q.size()).map(|x| q.left_translation(x)).collect();
    if !n.gens().iter().all(|h| gens.iter().all(|l| n.contains(&l.conjugate(h)))) {
        return Err(ConglatError::NotNormal);
    }
    Ok(())
}

/// 𝒪_N: the orbit partition of N.
pub fn orbit_cong(q: &QuandleTable, n: &PermGroup) -> Result<Congruence, ConglatError> {
    check_normal(q, n)?;
    let mut labels = vec![0; q.size()];
    for (b, orbit) in n.orbits().iter().enumerate() {
        for &x in orbit {
            labels[x] = b;
        }
    }
    Ok(Congruence::from_labels(&labels))
}

/// c_N: x ~ y iff L_x L_y⁻¹ ∈ N.
pub fn kernel_cong(q: &QuandleTable, n: &PermGroup) -> Result<Congruence, ConglatError> {
    check_normal(q, n)?;
    let size = q.size();
    let l: Vec<Permutation> = (0..size).map(|x| q.left_translation(x)).collect();
    let mut labels = vec![usize::MAX; size];
    let mut next = 0;
    for x in 0..size {
        if labels[x] != usize::MAX {
            continue;
        }
        labels[x] = next;
        let x_inv = l[x].inverse();
        for y in x + 1..size {
            if labels[y] == usize::MAX && n.contains(&l[y].compose(&x_inv)) {
                labels[y] = next;
            }
        }
        next += 1;
    }
    Ok(Congruence::from_labels(&labels))
}

fn require_faithful(q: &QuandleTable) -> Result<(), ConglatError> {
    if q.is_faithful() {
        Ok(())
    } else {
        Err(ConglatError::Precondition("quandle is not faithful".into()))
    }
}

/// For faithful Q: α is abelian iff Dis_α is abelian.
pub fn is_abelian_cong(q: &QuandleTable, alpha: &Congruence) -> Result<bool, ConglatError> {
    require_faithful(q)?;
    Ok(dis_alpha(q, alpha)?.is_abelian())
}

/// For faithful Q: α is central iff Dis_α ≤ Z(Dis(Q)).
pub fn is_central_cong(q: &QuandleTable, alpha: &Congruence) -> Result<bool, ConglatError> {
    require_faithful(q)?;
    let d = dis(q);
    let da = dis_alpha(q, alpha)?;
    Ok(da.gens().iter().all(|a| d.gens().iter().all(|g| a.compose(g) == g.compose(a))))
}

/// γ_Q = 𝒪_{[Dis, Dis]} for connected Q.
pub fn gamma(q: &QuandleTable) -> Result<Congruence, ConglatError> {
    if !q.is_connected() {
        return Err(ConglatError::Precondition("gamma needs a connected quandle".into()));
    }
    orbit_cong(q, &dis(q).derived_subgroup())
}

/// ζ_Q = 𝒪_{Z(Dis)} for latin Q.
pub fn zeta(q: &QuandleTable) -> Result<Congruence, ConglatError> {
    if !q.is_latin() {
        return Err(ConglatError::Precondition("zeta needs a latin quandle".into()));
    }
    orbit_cong(q, &dis(q).center()?)
}

/// Q is solvable iff Dis(Q) is.
pub fn is_solvable(q: &QuandleTable) -> bool {
    dis(q).is_solvable()
}

/// Q is nilpotent iff Dis(Q) is.
pub fn is_nilpotent(q: &QuandleTable) -> bool {
    dis(q).is_nilpotent()
}

/// x σ y iff Dis(Q)_x = Dis(Q)_y, by filtering the elements of Dis(Q).
pub fn sigma_relation(q: &QuandleTable) -> Result<Congruence, ConglatError> {
    let n = q.size();
    let words = n.div_ceil(64);
    // fixed_by_stab[x] = points fixed by every element of Dis_x.
    let mut fixed_by_stab = vec![vec![u64::MAX; words]; n];
    let mut fix = vec![0u64; words];
    for g in dis(q).elements()? {
        fix.iter_mut().for_each(|w| *w = 0);
        for x in 0..n {
            if g.apply(x) == x {
                fix[x / 64] |= 1 << (x % 64);
            }
        }
        for x in 0..n {
            if fix[x / 64] >> (x % 64) & 1 == 1 {
                for (a, b) in fixed_by_stab[x].iter_mut().zip(&fix) {
                    *a &= b;
                }
            }
        }
    }
    let has = |x: usize, y: usize| fixed_by_stab[x][y / 64] >> (y % 64) & 1 == 1;
    let mut labels = vec![usize::MAX; n];
    for x in 0..n {
        if labels[x] != usize::MAX {
            continue;
        }
        labels[x] = x;
        for (y, label) in labels.iter_mut().enumerate().skip(x + 1) {
            // Dis_x ≤ Dis_y iff Dis_x fixes y.
            if *label == usize::MAX && has(x, y) && has(y, x) {
                *label = x;
            }
        }
    }
    Ok(Congruence::from_labels(&labels))
}
