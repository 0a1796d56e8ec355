//! Small affine quandles: Q₄, the latin quandles of size 16 and the
//! connected affine quandles of prime size.

use super::ConstructionError;
use crate::linfq::{companion, F2Poly, FqMatrix};
use crate::quandle::{affine, affine_zm, QuandleTable};

/// Q₄ = Aff(𝔽₄, ω), the tetrahedral quandle.
pub fn build_q4() -> QuandleTable {
    affine(&q4_matrix()).expect("x² + x + 1 has no root 0")
}

/// Companion of x² + x + 1 over 𝔽₂.
pub fn q4_matrix() -> FqMatrix {
    companion(F2Poly(0b111)).expect("degree 2")
}

/// Representatives of the GL₄(2) classes with no eigenvalue 0 or 1, as
/// rational canonical forms: C ⊕ C and the companion of (x² + x + 1)², then
/// the companions of the three irreducible quartics.
pub fn gl42_latin_classes() -> Vec<FqMatrix> {
    let c = q4_matrix();
    let mut out = vec![crate::linfq::block_diag(&[c.clone(), c]).expect("same field")];
    for bits in [0b10101u128, 0b10011, 0b11001, 0b11111] {
        out.push(companion(F2Poly(bits)).expect("degree 4"));
    }
    out
}

/// Companions [[0, −d], [1, t]] over ℤ₄ with t, d odd: the GL₂(ℤ₄) classes
/// of f with f and 1 − f invertible.
pub fn z4_latin_classes() -> Vec<Vec<Vec<u32>>> {
    let mut out = Vec::new();
    for t in [1u32, 3] {
        for d in [1u32, 3] {
            out.push(vec![vec![0, 4 - d], vec![1, t]]);
        }
    }
    out
}

/// The latin quandles of size 16: five over ℤ₂⁴, four over ℤ₄².
pub fn latin16_family() -> Vec<QuandleTable> {
    let mut out: Vec<QuandleTable> = gl42_latin_classes().iter().map(|f| affine(f).expect("invertible")).collect();
    out.extend(z4_latin_classes().iter().map(|f| affine_zm(4, f).expect("invertible mod 4")));
    out
}

/// Aff(ℤ_p, c) for c = 2, …, p − 1.
pub fn latin_p_family(p: u32) -> Result<Vec<QuandleTable>, ConstructionError> {
    if !crate::util::is_prime(p) || p == 2 {
        return Err(ConstructionError::Domain(format!("need an odd prime, got {p}")));
    }
    Ok((2..p as i64).map(|c| affine(&FqMatrix::scalar(p, 1, c)).expect("c ≠ 0")).collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn q4_is_latin_and_small() {
        let q = build_q4();
        assert_eq!(q.size(), 4);
        assert!(q.is_latin() && q.is_faithful());
    }

    #[test]
    fn inventories_are_latin() {
        let fam = latin16_family();
        assert_eq!(fam.len(), 9);
        assert!(fam.iter().all(|q| q.size() == 16 && q.is_latin()));
        let lp = latin_p_family(7).unwrap();
        assert_eq!(lp.len(), 5);
        assert!(lp.iter().all(QuandleTable::is_latin));
        assert!(latin_p_family(9).is_err());
    }
}
