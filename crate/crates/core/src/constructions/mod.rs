//! Named groups, automorphisms and quandles: 𝒢ₖ and its automorphisms,
//! the families Q(p, j) and 𝔔(p, j), the small affine inventory, G₃ and G₅,
//! and the extraspecial group K₅₀.

pub mod aut;
pub mod g3g5;
pub mod gk;
pub mod k50;
pub mod small;

pub use gk::{
    build_f_sr, build_f_sr_from_words, build_fj, build_gk, build_gk_klein, build_qpj, build_sr, klein_m,
    quaternion_group, BuiltQuandle, GkParams, Twist,
};
pub use small::{build_q4, latin16_family, latin_p_family};

use thiserror::Error;

use crate::grpmodel::GroupError;
use crate::linfq::LinAlgError;
use crate::quandle::QuandleError;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ConstructionError {
    #[error("outside the family: {0}")]
    Domain(String),
    #[error("F_j ρ_q ≠ ρ_φ(q) F_j at q = {q}")]
    Incompatible { q: u32 },
    #[error("{0} is not an automorphism")]
    NotAutomorphism(String),
    #[error("presentation not realized: {0}")]
    Realization(String),
    #[error("search capacity exceeded: {0}")]
    Capacity(String),
    #[error(transparent)]
    Group(#[from] GroupError),
    #[error(transparent)]
    Quandle(#[from] QuandleError),
    #[error(transparent)]
    LinAlg(#[from] LinAlgError),
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::conglat::{all_congruences, LatticeShape};
    use crate::quiso::are_isomorphic;

    fn p7() -> GkParams {
        GkParams::new(7).unwrap()
    }

    #[test]
    fn cube_root_choice() {
        assert_eq!(p7().k, 2);
        assert!(GkParams::new(11).is_err());
        assert!(GkParams::with_root(7, 4).is_ok());
        assert!(GkParams::with_root(7, 3).is_err());
    }

    #[test]
    fn gk_structure() {
        let g = build_gk(p7()).unwrap();
        assert_eq!(g.order(), 392);
        assert_eq!(g.derived_subgroup().order(), 98);
        assert_eq!(g.lower_central_series()[2].order(), 49);
        let gz = build_gk_klein(p7()).unwrap();
        let z = gz.center();
        assert_eq!(z.order(), 4);
        assert!(z.members().iter().all(|&e| e % 392 == 0));
    }

    #[test]
    fn automorphism_orders() {
        let par = p7();
        let g = build_gk(par).unwrap();
        let f = build_fj(par, &g, 1).unwrap();
        assert_eq!(f.order(), 3);
        let gz = build_gk_klein(par).unwrap();
        for j in [1, 2] {
            for a in [Twist::Zero, Twist::E1] {
                let closed = build_f_sr(par, &gz, j, a).unwrap();
                assert_eq!(closed, build_f_sr_from_words(par, &gz, j, a).unwrap());
            }
        }
        let f = build_f_sr(par, &gz, 1, Twist::E1).unwrap();
        assert_eq!(f.order(), 6);
        assert_eq!(crate::grpmodel::fix_subgroup(&gz, &f).order(), 14);
    }

    #[test]
    fn family_quandles() {
        let q = build_qpj(p7(), 1).unwrap().coset.table;
        assert_eq!(q.size(), 28);
        assert!(q.is_latin());
        assert!(all_congruences(&q).unwrap().is_chain());
        let sr = build_sr(p7(), 1, Twist::E1).unwrap().coset.table;
        assert_eq!(sr.size(), 112);
        assert!(sr.is_latin());
        let lat = all_congruences(&sr).unwrap();
        assert!(matches!(lat.shape(), LatticeShape::Diamond { .. }));
        assert!(!lat.is_directly_decomposable());
    }

    #[test]
    fn other_cube_root_gives_isomorphic_quandles() {
        let a = build_qpj(p7(), 1).unwrap().coset.table;
        let b = build_qpj(GkParams::with_root(7, 4).unwrap(), 1).unwrap().coset.table;
        let c = build_qpj(GkParams::with_root(7, 4).unwrap(), 2).unwrap().coset.table;
        assert!(are_isomorphic(&a, &b).is_some() || are_isomorphic(&a, &c).is_some());
    }

    #[test]
    fn presented_groups() {
        for (pair, size) in [(g3g5::G3, 48), (g3g5::G5, 80)] {
            let r = g3g5::realize(&pair).unwrap();
            assert_eq!(r.group.center().order(), 1);
            let q = g3g5::build_presented_quandle(&r).unwrap().coset.table;
            assert_eq!(q.size(), size);
            assert!(q.is_latin());
            let lat = all_congruences(&q).unwrap();
            assert!(lat.is_chain() && lat.len() == 3);
        }
    }

    #[test]
    fn k50_group() {
        let (k, _) = k50::build_k50().unwrap();
        assert_eq!(k.order(), 32);
        assert!(k50::k50_no_centerless_rep(3).unwrap());
        assert!(k50::k50_no_centerless_rep(13).is_err());
    }
}
