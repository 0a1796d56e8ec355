//! Dense linear algebra over prime fields and binary polynomial arithmetic.

mod f2poly;
mod matrix;

pub use f2poly::{companion, companion_fp, factor_x_pow_p_minus_1, irreducibles_up_to, ord2_mod, F2Poly};
pub(crate) use matrix::inv_mod;
pub use matrix::{
    block_diag, fix_space, index_to_vec, intertwiners, mat_inv, mat_mul, mat_order, vec_to_index, FqMatrix,
};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LinAlgError {
    #[error("dimension mismatch: {left:?} against {right:?}")]
    DimensionMismatch { left: (usize, usize), right: (usize, usize) },
    #[error("matrices over F_{left} and F_{right}")]
    FieldMismatch { left: u32, right: u32 },
    #[error("matrix is {rows}x{cols}, not square")]
    NotSquare { rows: usize, cols: usize },
    #[error("singular matrix of rank {rank}")]
    Singular { rank: usize },
    #[error("polynomial is not monic")]
    NotMonic,
    #[error("no identity power up to {bound}")]
    OrderBound { bound: u64 },
    #[error("{0}")]
    InvalidArgument(String),
}
