//! Permutation groups: stabiliser chains, normal closures, series, centres,
//! block kernels and coset actions.

mod chain;
mod group;
mod perm;

pub use group::{orbits_of, CosetAction, PermGroup, COSET_INDEX_CAP, ENUMERATION_CAP};
pub use perm::Permutation;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PermError {
    #[error("image array is not a bijection")]
    NotBijective,
    #[error("degree {0} exceeds the u16 point range")]
    DegreeTooLarge(usize),
    #[error("expected degree {expected}, got {got}")]
    DegreeMismatch { expected: usize, got: usize },
    #[error("group of order {order} exceeds the enumeration cap {cap}")]
    Capacity { order: u128, cap: u128 },
    #[error("partition is not invariant under the group")]
    NotInvariant,
    #[error("subgroup is not normal")]
    NotNormal,
    #[error("element does not belong to the group")]
    NotMember,
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::HashSet;

    fn cyc(n: usize, cycles: &[&[usize]]) -> Permutation {
        Permutation::from_cycles(n, cycles).unwrap()
    }

    fn bfs_order(degree: usize, gens: &[Permutation]) -> usize {
        let mut seen: HashSet<Permutation> = HashSet::new();
        let id = Permutation::identity(degree);
        seen.insert(id.clone());
        let mut queue = vec![id];
        while let Some(g) = queue.pop() {
            for s in gens {
                let h = s.compose(&g);
                if seen.insert(h.clone()) {
                    queue.push(h);
                }
            }
        }
        seen.len()
    }

    #[test]
    fn four_cycle_generates_cyclic_group_of_order_four() {
        let g = PermGroup::closure(4, &[cyc(4, &[&[0, 1, 2, 3]])]).unwrap();
        assert_eq!(g.order(), 4);
        assert!(g.is_abelian());
    }

    #[test]
    fn symmetric_and_alternating_orders() {
        for n in 2..=8usize {
            let all: Vec<usize> = (0..n).collect();
            let s = PermGroup::closure(n, &[cyc(n, &[&[0, 1]]), cyc(n, &[&all])]).unwrap();
            assert_eq!(s.order(), (1..=n as u128).product::<u128>());
            if n >= 3 {
                let a = s.derived_subgroup();
                assert_eq!(a.order() * 2, s.order());
            }
        }
    }

    #[test]
    fn many_generators_are_reduced_without_losing_the_group() {
        // All transpositions of S_7: 21 generators.
        let mut gens = Vec::new();
        for i in 0..7 {
            for j in i + 1..7 {
                gens.push(cyc(7, &[&[i, j]]));
            }
        }
        let g = PermGroup::closure(7, &gens).unwrap();
        assert_eq!(g.order(), 5040);
        assert!(gens.iter().all(|t| g.contains(t)));
    }

    #[test]
    fn elements_match_bfs_closure() {
        let gens = [cyc(6, &[&[0, 1, 2], &[3, 4]]), cyc(6, &[&[1, 5]])];
        let g = PermGroup::closure(6, &gens).unwrap();
        let els = g.elements().unwrap();
        assert_eq!(els.len() as u128, g.order());
        assert_eq!(els.len(), bfs_order(6, &gens));
        let set: HashSet<_> = els.iter().collect();
        assert_eq!(set.len(), els.len());
    }

    #[test]
    fn center_of_dihedral_group_of_order_eight() {
        let d8 = PermGroup::closure(4, &[cyc(4, &[&[0, 1, 2, 3]]), cyc(4, &[&[0, 2]])]).unwrap();
        assert_eq!(d8.order(), 8);
        let z = d8.center().unwrap();
        assert_eq!(z.order(), 2);
        assert!(z.contains(&cyc(4, &[&[0, 2], &[1, 3]])));
        assert!(d8.is_nilpotent());
        assert_eq!(d8.lower_central_series().len(), 3);
    }

    #[test]
    fn block_kernels_of_trivial_partitions() {
        let d8 = PermGroup::closure(4, &[cyc(4, &[&[0, 1, 2, 3]]), cyc(4, &[&[0, 2]])]).unwrap();
        assert!(d8.block_action_kernel(&[0, 1, 2, 3]).unwrap().is_trivial());
        assert_eq!(d8.block_action_kernel(&[0, 0, 0, 0]).unwrap().order(), 8);
        assert_eq!(d8.block_action_kernel(&[0, 1, 0, 1]).unwrap().order(), 4);
        assert_eq!(d8.block_action_kernel(&[0, 0, 1, 1]).err(), Some(PermError::NotInvariant));
    }

    #[test]
    fn coset_action_requires_normality() {
        let s4 = PermGroup::closure(4, &[cyc(4, &[&[0, 1]]), cyc(4, &[&[0, 1, 2, 3]])]).unwrap();
        let k = PermGroup::closure(4, &[cyc(4, &[&[0, 1], &[2, 3]]), cyc(4, &[&[0, 2], &[1, 3]])]).unwrap();
        let q = s4.coset_action(&k).unwrap();
        assert_eq!(q.group.order(), 6);
        let h = PermGroup::closure(4, &[cyc(4, &[&[0, 1]])]).unwrap();
        assert_eq!(s4.coset_action(&h).err(), Some(PermError::NotNormal));
    }

    #[test]
    fn normal_closure_is_minimal() {
        let s4 = PermGroup::closure(4, &[cyc(4, &[&[0, 1]]), cyc(4, &[&[0, 1, 2, 3]])]).unwrap();
        let v = s4.normal_closure(&[cyc(4, &[&[0, 1], &[2, 3]])]).unwrap();
        assert_eq!(v.order(), 4);
        let a = s4.normal_closure(&[cyc(4, &[&[0, 1, 2]])]).unwrap();
        assert_eq!(a.order(), 12);
    }
}
