use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::iso::are_isomorphic;
use super::QuisoError;
use crate::conglat::all_congruences;
use crate::quandle::{dis, lmlt, QuandleTable};

/// Isomorphism invariants of a connected quandle.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Fingerprint {
    pub n: usize,
    pub lmlt_order: u128,
    pub dis_order: u128,
    pub dis_center_order: u128,
    pub con_size: usize,
    pub shape: String,
    pub directly_decomposable: bool,
    /// Sorted orders of the left translations.
    pub left_orders: Vec<u64>,
    /// Cycle type of L_0 (all L_x are conjugate in a connected quandle).
    pub left_cycle_type: Vec<usize>,
    /// Cycle type of R_0, for latin quandles.
    pub right_cycle_type: Option<Vec<usize>>,
    /// (element order, count) pairs of Dis/[Dis, Dis], which determine the
    /// abelian group.
    pub abelianization: Vec<(u64, usize)>,
}

pub fn fingerprint(q: &QuandleTable) -> Result<Fingerprint, QuisoError> {
    if !q.is_connected() {
        return Err(QuisoError::NotConnected);
    }
    let d = dis(q);
    let lattice = all_congruences(q)?;
    let mut left_orders: Vec<u64> = (0..q.size()).map(|x| q.left_translation(x).order()).collect();
    left_orders.sort_unstable();
    let quotient = d.coset_action(&d.derived_subgroup())?;
    let mut counts: BTreeMap<u64, usize> = BTreeMap::new();
    for o in quotient.group.element_orders()? {
        *counts.entry(o).or_default() += 1;
    }
    Ok(Fingerprint {
        n: q.size(),
        lmlt_order: lmlt(q).order(),
        dis_order: d.order(),
        dis_center_order: d.center()?.order(),
        con_size: lattice.len(),
        shape: lattice.shape().tag(),
        directly_decomposable: lattice.is_directly_decomposable(),
        left_orders,
        left_cycle_type: q.left_translation(0).cycle_type(),
        right_cycle_type: q.right_translation(0).map(|r| r.cycle_type()),
        abelianization: counts.into_iter().collect(),
    })
}

/// Isomorphism-class representatives, in input order of first occurrence.
///
/// Quandles are bucketed by fingerprint and compared by backtracking only
/// within a bucket.
pub fn dedupe(qs: &[QuandleTable]) -> Result<Vec<usize>, QuisoError> {
    let fps: Vec<Fingerprint> = qs.par_iter().map(fingerprint).collect::<Result<_, _>>()?;
    Ok(dedupe_with(qs, &fps))
}

/// [`dedupe`] with precomputed fingerprints.
pub fn dedupe_with(qs: &[QuandleTable], fps: &[Fingerprint]) -> Vec<usize> {
    let mut buckets: BTreeMap<&Fingerprint, Vec<usize>> = BTreeMap::new();
    for (i, f) in fps.iter().enumerate() {
        buckets.entry(f).or_default().push(i);
    }
    let per_bucket: Vec<Vec<usize>> = buckets
        .into_values()
        .collect::<Vec<_>>()
        .into_par_iter()
        .map(|members| {
            let mut reps: Vec<usize> = Vec::new();
            for i in members {
                if !reps.iter().any(|&r| are_isomorphic(&qs[r], &qs[i]).is_some()) {
                    reps.push(i);
                }
            }
            reps
        })
        .collect();
    let mut out: Vec<usize> = per_bucket.into_iter().flatten().collect();
    out.sort_unstable();
    out
}
