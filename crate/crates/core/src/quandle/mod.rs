//! Quandle tables, standard constructions, LMlt and Dis, and text I/O.

mod build;
mod io;
mod table;

pub use build::{
    affine, affine_zm, coset_quandle, coset_quandle_full, direct_product, quotient, CosetQuandle, CosetSpec,
};
pub use io::{deserialize, serialize};
pub use table::{cayley_kernel, dis, lmlt, QuandleTable};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum QuandleError {
    #[error("unsupported size {0}")]
    Size(usize),
    #[error("row {row} not a permutation")]
    NotPermutationRow { row: usize },
    #[error("{x} * {x} != {x}")]
    NotIdempotent { x: usize },
    #[error("left distributivity fails at ({x}, {y}, {z})")]
    NotDistributive { x: usize, y: usize, z: usize },
    #[error("affine map is not invertible")]
    Singular,
    #[error("subgroup element {witness} is not fixed by f")]
    NotFixed { witness: u32 },
    #[error("partition is not a congruence")]
    NotCongruence,
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::grpmodel::{FiniteGroup, GroupMap, Subgroup};
    use crate::linfq::{companion, F2Poly, FqMatrix};

    fn q4() -> QuandleTable {
        affine(&companion(F2Poly(0b111)).unwrap()).unwrap()
    }

    #[test]
    fn small_affine_quandles() {
        let a = affine(&FqMatrix::scalar(3, 1, 2)).unwrap();
        assert_eq!(a.star(0, 1), 2);
        assert!(a.is_latin());
        let t = affine(&FqMatrix::scalar(5, 1, 1)).unwrap();
        assert_eq!(t, QuandleTable::trivial(5));
        assert_eq!(affine(&FqMatrix::scalar(5, 1, 0)), Err(QuandleError::Singular));
        assert_eq!(affine_zm(4, &[vec![2]]), Err(QuandleError::Singular));
    }

    #[test]
    fn tetrahedron_quandle() {
        let q = q4();
        assert_eq!(q.size(), 4);
        assert!(q.is_latin() && q.is_connected() && q.is_faithful());
        q.check_distributive().unwrap();
        assert_eq!(lmlt(&q).order(), 12);
        let d = dis(&q);
        assert_eq!(d.order(), 4);
        assert!((0..4).all(|x| !d.contains(&q.left_translation(x))));
    }

    #[test]
    fn products_of_latin_quandles_are_latin() {
        let q = direct_product(&q4(), &affine(&FqMatrix::scalar(7, 1, 3)).unwrap()).unwrap();
        assert_eq!(q.size(), 28);
        assert!(q.is_latin());
        assert_eq!(dis(&q).order(), 4 * 7);
    }

    #[test]
    fn coset_quandle_requires_fixed_subgroup() {
        // Conjugation quandle of Z_3 under inversion: f(x) = -x.
        let g = FiniteGroup::cyclic(3);
        let f = GroupMap::from_images(vec![0, 2, 1]);
        let spec = CosetSpec { group: g.clone(), subgroup: Subgroup::from_members(vec![0]), f: f.clone() };
        let q = coset_quandle(&spec).unwrap();
        assert_eq!(q, affine(&FqMatrix::scalar(3, 1, 2)).unwrap());
        let bad = CosetSpec { group: g, subgroup: Subgroup::from_members(vec![0, 1, 2]), f };
        assert!(matches!(coset_quandle(&bad), Err(QuandleError::NotFixed { .. })));
    }

    #[test]
    fn quotient_by_the_product_projection() {
        let q = direct_product(&q4(), &affine(&FqMatrix::scalar(5, 1, 2)).unwrap()).unwrap();
        let blocks: Vec<usize> = (0..20).map(|x| x / 5).collect();
        assert_eq!(quotient(&q, &blocks).unwrap(), q4());
        let bad: Vec<usize> = (0..20).map(|x| usize::from(x == 3)).collect();
        assert_eq!(quotient(&q, &bad), Err(QuandleError::NotCongruence));
    }

    #[test]
    fn cayley_kernel_of_trivial_and_faithful() {
        assert_eq!(cayley_kernel(&QuandleTable::trivial(3)), vec![0, 0, 0]);
        assert_eq!(cayley_kernel(&q4()), vec![0, 1, 2, 3]);
    }

    #[test]
    fn text_round_trip_and_errors() {
        let q = q4();
        let text = serialize(&q);
        assert!(text.starts_with("quandle 4\n0 "));
        assert_eq!(deserialize(&text).unwrap(), q);
        assert_eq!(deserialize(&format!("# made by hand\n{text}")).unwrap(), q);
        let bad_row = "quandle 3\n0 2 1\n2 1 1\n1 0 2\n";
        assert_eq!(deserialize(bad_row), Err(QuandleError::Parse { line: 3, msg: "row 1 not a permutation".into() }));
        let short = "quandle 4\n0 2 1\n2 1 0\n1 0 2\n";
        assert!(matches!(deserialize(short), Err(QuandleError::Parse { line: 2, .. })));
        let late_comment = "quandle 1\n# no\n0\n";
        assert!(deserialize(late_comment).is_err());
        assert!(deserialize("quandle 1\r\n0\r\n").is_err());
        assert_eq!(deserialize("quandle 1\n0\n").unwrap(), QuandleTable::trivial(1));
    }

    #[test]
    fn subquandle_closure() {
        let q = direct_product(&q4(), &q4()).unwrap();
        assert_eq!(q.subquandle_generated(&[0]).len(), 1);
        let s = q.subquandle_generated(&[0, 5]);
        assert!(s.len() > 2 && 16 % s.len() == 0);
    }
}
