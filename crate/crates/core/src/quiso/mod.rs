//! Quandle isomorphism: backtracking, conjugacy of automorphisms, and
//! invariant fingerprints for deduplication.

mod conj;
mod fingerprint;
mod iso;

pub use conj::{conjugacy_orbit, displacement_generates, iso_via_conjugacy};
pub use fingerprint::{dedupe, dedupe_with, fingerprint, Fingerprint};
pub use iso::{are_isomorphic, generating_set, is_isomorphism};

use thiserror::Error;

use crate::conglat::ConglatError;
use crate::permgrp::PermError;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum QuisoError {
    #[error("quandle is not connected")]
    NotConnected,
    #[error("⟨g f(g)⁻¹⟩ is a proper subgroup, so Dis(Q) is not G")]
    NotMinimal,
    #[error(transparent)]
    Lattice(#[from] ConglatError),
    #[error(transparent)]
    Perm(#[from] PermError),
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::grpmodel::{extend_map, FiniteGroup, GroupMap};
    use crate::linfq::FqMatrix;
    use crate::quandle::{affine, QuandleTable};

    fn aff(p: u32, c: i64) -> QuandleTable {
        affine(&FqMatrix::scalar(p, 1, c)).unwrap()
    }

    /// Oracle: try every bijection.
    fn brute_iso(a: &QuandleTable, b: &QuandleTable) -> bool {
        fn rec(a: &QuandleTable, b: &QuandleTable, phi: &mut Vec<usize>, used: &mut [bool]) -> bool {
            let n = a.size();
            if phi.len() == n {
                return is_isomorphism(a, b, phi);
            }
            for y in 0..n {
                if !used[y] {
                    used[y] = true;
                    phi.push(y);
                    if rec(a, b, phi, used) {
                        return true;
                    }
                    phi.pop();
                    used[y] = false;
                }
            }
            false
        }
        rec(a, b, &mut Vec::new(), &mut vec![false; a.size()])
    }

    #[test]
    fn cyclic_affine_quandles() {
        let q = aff(5, 2);
        assert!(is_isomorphism(&q, &q, &are_isomorphic(&q, &q).unwrap()));
        for c in 2..5 {
            for d in 2..5 {
                let (a, b) = (aff(5, c), aff(5, d));
                assert_eq!(are_isomorphic(&a, &b).is_some(), brute_iso(&a, &b), "{c} {d}");
                assert_eq!(are_isomorphic(&a, &b).is_some(), c == d);
            }
        }
    }

    #[test]
    fn relabelled_copy_is_found() {
        let q = crate::quandle::direct_product(&aff(3, 2), &aff(5, 3)).unwrap();
        let n = q.size();
        let perm: Vec<usize> = (0..n).map(|x| (x * 7 + 4) % n).collect();
        let mut star = vec![0u16; n * n];
        for x in 0..n {
            for y in 0..n {
                star[perm[x] * n + perm[y]] = perm[q.star(x, y)] as u16;
            }
        }
        let r = QuandleTable::new(n, star).unwrap();
        let phi = are_isomorphic(&q, &r).unwrap();
        assert!(is_isomorphism(&q, &r, &phi));
        assert_eq!(dedupe(&[q.clone(), r, aff(3, 2)]).err(), None);
        let reps = dedupe(&[q.clone(), q]).unwrap();
        assert_eq!(reps, vec![0]);
    }

    #[test]
    fn conjugacy_in_cyclic_group() {
        // Aut(Z_7) = {x ↦ cx}; it is abelian, so distinct c are never conjugate.
        let g = FiniteGroup::cyclic(7);
        let mult = |c: u32| extend_map(&g, &g, &[1], &[c]).unwrap();
        let family = vec![mult(3)];
        assert!(iso_via_conjugacy(&g, &mult(2), &mult(2), &family).unwrap());
        assert!(!iso_via_conjugacy(&g, &mult(2), &mult(4), &family).unwrap());
        assert_eq!(iso_via_conjugacy(&g, &GroupMap::identity(&g), &mult(2), &family), Err(QuisoError::NotMinimal));
        assert_eq!(conjugacy_orbit(&mult(5), &family).len(), 1);
    }
}
