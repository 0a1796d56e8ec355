//! Congruences, congruence lattices and the commutator-theoretic predicates
//! read off the displacement group.

mod congruence;
pub mod galois;
mod lattice;

pub use congruence::{principal_congruence, Congruence};
pub use galois::{
    dis_alpha, dis_sup_alpha, gamma, is_abelian_cong, is_central_cong, is_nilpotent, is_solvable, kernel_cong,
    orbit_cong, sigma_relation, zeta,
};
pub use lattice::{
    all_congruences, all_congruences_all_pairs, CongruenceLattice, LatticeShape, ALL_PAIRS_CAP, CONGRUENCE_COUNT_CAP,
    LATTICE_SIZE_CAP,
};

use thiserror::Error;

use crate::permgrp::PermError;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ConglatError {
    #[error("capacity exceeded: {0}")]
    Capacity(String),
    #[error("expected size {expected}, got {got}")]
    SizeMismatch { expected: usize, got: usize },
    #[error("subgroup is not normal in LMlt(Q)")]
    NotNormal,
    #[error("precondition failed: {0}")]
    Precondition(String),
    #[error("inconsistent lattice: {0}")]
    Inconsistent(String),
    #[error(transparent)]
    Perm(#[from] PermError),
}
