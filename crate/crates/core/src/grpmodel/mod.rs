//! Concrete finite groups with canonical element indices, group maps,
//! presentations and small-group isomorphism.

mod group;
mod map;
mod presentation;

pub use group::{Elem, FiniteGroup, Subgroup};
pub use map::{cayley_words, extend_map, fix_subgroup, CayleyWords, GroupMap, EXHAUSTIVE_HOM_CHECK};
pub use presentation::{
    find_isomorphism, parse_relators, realizations, realize_presentation, small_group_iso, Word, REALIZE_CAP,
    SMALL_GROUP_CAP,
};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GroupError {
    #[error("invalid multiplication table: {0}")]
    BadTable(String),
    #[error("not a homomorphism: {0}")]
    NotHomomorphism(String),
    #[error("generators reach {reached} of {order} elements")]
    DoesNotGenerate { reached: usize, order: usize },
    #[error("subgroup is not normal")]
    NotNormal,
    #[error("too large: {0}")]
    TooLarge(String),
    #[error("cannot parse word: {0}")]
    Parse(String),
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linfq::FqMatrix;

    fn klein() -> FiniteGroup {
        FiniteGroup::vector(2, 2)
    }

    #[test]
    fn cyclic_and_vector_groups() {
        let c6 = FiniteGroup::cyclic(6);
        assert_eq!(c6.order_statistics(), vec![1, 2, 3, 3, 6, 6]);
        let v = FiniteGroup::vector(3, 2);
        assert_eq!(v.order(), 9);
        assert!(v.is_abelian());
        assert_eq!(v.mul(v.inv(5), 5), 0);
    }

    #[test]
    fn semidirect_rejects_non_multiplicative_action() {
        let c2 = FiniteGroup::cyclic(2);
        let bad = vec![FqMatrix::identity(3, 1), FqMatrix::scalar(3, 1, 1)];
        assert!(FiniteGroup::semidirect(1, 3, &c2, &bad).is_ok());
        let bad = vec![FqMatrix::scalar(3, 1, -1), FqMatrix::scalar(3, 1, -1)];
        assert!(matches!(FiniteGroup::semidirect(1, 3, &c2, &bad), Err(GroupError::NotHomomorphism(_))));
    }

    #[test]
    fn dihedral_as_semidirect() {
        let c2 = FiniteGroup::cyclic(2);
        let rho = vec![FqMatrix::identity(5, 1), FqMatrix::scalar(5, 1, -1)];
        let d10 = FiniteGroup::semidirect(1, 5, &c2, &rho).unwrap();
        assert_eq!(d10.order(), 10);
        assert!(!d10.is_abelian());
        assert_eq!(d10.center().order(), 1);
        assert_eq!(d10.derived_subgroup().order(), 5);
        for x in 0..10 {
            assert_eq!(d10.mul(x, d10.inv(x)), 0);
        }
    }

    #[test]
    fn extend_map_detects_relation_violations() {
        let c4 = FiniteGroup::cyclic(4);
        let c2 = FiniteGroup::cyclic(2);
        assert!(extend_map(&c4, &c2, &[1], &[1]).is_ok());
        let c3 = FiniteGroup::cyclic(3);
        assert!(extend_map(&c4, &c3, &[1], &[1]).is_err());
    }

    #[test]
    fn word_parser_expands_powers() {
        let w = Word::parse("ab", "(ab^-1)^2a").unwrap();
        assert_eq!(w.0, vec![(0, 1), (1, -1), (0, 1), (1, -1), (0, 1)]);
        assert!(Word::parse("ab", "c").is_err());
    }

    #[test]
    fn klein_group_presentation_is_realised() {
        let rels = parse_relators("ab", "a^2,b^2,abab").unwrap();
        let t = realize_presentation(&klein(), 2, &rels).unwrap().unwrap();
        assert_eq!(klein().closure(&t).order(), 4);
        // Z_4 cannot be generated by two commuting involutions.
        assert_eq!(realize_presentation(&FiniteGroup::cyclic(4), 2, &rels).unwrap(), None);
    }

    #[test]
    fn small_iso_distinguishes_c4_from_klein() {
        assert!(small_group_iso(&FiniteGroup::cyclic(4), &klein()).unwrap().is_none());
        let direct = FiniteGroup::direct(&FiniteGroup::cyclic(2), &FiniteGroup::cyclic(3));
        let iso = small_group_iso(&direct, &FiniteGroup::cyclic(6)).unwrap().unwrap();
        assert!(iso.is_bijective());
    }

    #[test]
    fn quotient_of_cyclic_group() {
        let c12 = FiniteGroup::cyclic(12);
        let n = c12.closure(&[4]);
        let (q, proj) = c12.quotient(&n).unwrap();
        assert_eq!(q.order(), 4);
        assert_eq!(proj[0], 0);
        assert!(small_group_iso(&q, &FiniteGroup::cyclic(4)).unwrap().is_some());
    }
}
