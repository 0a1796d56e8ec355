//! 𝒢ₖ = ℤ_p² ⋊_ρ 𝒬₈, its product with ℤ₂², the automorphisms f(j) and
//! f(j, a), and the quandles Q(p, j) and 𝔔(p, j) built from them.

use super::ConstructionError;
use crate::grpmodel::{extend_map, fix_subgroup, Elem, FiniteGroup, GroupMap, Subgroup};
use crate::linfq::{index_to_vec, vec_to_index, FqMatrix};
use crate::quandle::{coset_quandle_full, CosetQuandle, CosetSpec};
use crate::util::{is_prime, least_cube_root_of_unity};

/// Quaternion units in 𝒬₈: index u + 4s stands for (−1)ˢ·u with
/// u ∈ {1, i, j, k}.
pub mod q8 {
    use crate::grpmodel::Elem;

    pub const ONE: Elem = 0;
    pub const I: Elem = 1;
    pub const J: Elem = 2;
    pub const K: Elem = 3;
    pub const MINUS_ONE: Elem = 4;

    /// Product of units as (sign, unit).
    const UNIT: [[(u32, u32); 4]; 4] = [
        [(0, 0), (0, 1), (0, 2), (0, 3)],
        [(0, 1), (1, 0), (0, 3), (1, 2)],
        [(0, 2), (1, 3), (1, 0), (0, 1)],
        [(0, 3), (0, 2), (1, 1), (1, 0)],
    ];

    pub fn mul(a: Elem, b: Elem) -> Elem {
        let (sa, ua) = (a / 4, a % 4);
        let (sb, ub) = (b / 4, b % 4);
        let (s, u) = UNIT[ua as usize][ub as usize];
        u + 4 * ((sa + sb + s) % 2)
    }

    pub fn neg(a: Elem) -> Elem {
        (a + 4) % 8
    }

    /// The automorphism i ↦ j ↦ k ↦ i.
    pub fn phi(a: Elem) -> Elem {
        let u = a % 4;
        let img = if u == 0 { 0 } else { u % 3 + 1 };
        img + 4 * (a / 4)
    }

    /// Image in 𝒬₈/⟨−1⟩ ≅ ℤ₂² as bits (i ↦ 01, j ↦ 10, k ↦ 11).
    pub fn klein_class(a: Elem) -> u32 {
        [0, 1, 2, 3][(a % 4) as usize]
    }
}

/// The quaternion group as a table group with the indexing of [`q8`].
pub fn quaternion_group() -> FiniteGroup {
    let mul = (0..64u32).map(|i| q8::mul(i / 8, i % 8)).collect();
    FiniteGroup::from_table(8, mul).expect("quaternion table")
}

/// Parameters of 𝒢ₖ: the prime and the chosen cube root of unity.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct GkParams {
    pub p: u32,
    pub k: u32,
}

impl GkParams {
    /// k is the least cube root of unity other than 1.
    pub fn new(p: u32) -> Result<Self, ConstructionError> {
        if !is_prime(p) || p % 3 != 1 {
            return Err(ConstructionError::Domain(format!("need a prime p ≡ 1 mod 3, got {p}")));
        }
        let k = least_cube_root_of_unity(p).expect("p ≡ 1 mod 3 has cube roots of unity");
        Ok(GkParams { p, k })
    }

    pub fn with_root(p: u32, k: u32) -> Result<Self, ConstructionError> {
        let base = Self::new(p)?;
        let (kk, pp) = (k as u64, p as u64);
        if (kk * kk + kk + 1) % pp != 0 {
            return Err(ConstructionError::Domain(format!("{k} is not a nontrivial cube root of 1 mod {p}")));
        }
        Ok(GkParams { k, ..base })
    }

    fn m(&self, rows: &[[i64; 2]; 2]) -> FqMatrix {
        FqMatrix::from_rows(self.p, &rows.iter().map(|r| r.to_vec()).collect::<Vec<_>>())
    }

    pub fn rho_x(&self) -> FqMatrix {
        self.m(&[[0, -1], [1, 0]])
    }

    pub fn rho_y(&self) -> FqMatrix {
        let k = self.k as i64;
        self.m(&[[k * k, k], [k, -k * k]])
    }

    pub fn rho_z(&self) -> FqMatrix {
        FqMatrix::scalar(self.p, 2, -1)
    }

    /// ρ on every element of 𝒬₈, extended multiplicatively from ρ_x, ρ_y.
    pub fn rho(&self) -> Vec<FqMatrix> {
        let units = [FqMatrix::identity(self.p, 2), self.rho_x(), self.rho_y(), &self.rho_x() * &self.rho_y()];
        (0..8).map(|a| if a < 4 { units[a].clone() } else { units[a - 4].neg() }).collect()
    }

    /// F_j = [[−k(1+kʲ), −(1+kʲ)], [0, −k²(1+kʲ)]].
    pub fn f_matrix(&self, j: u32) -> FqMatrix {
        let (p, k) = (self.p as i64, self.k as i64);
        let kj = (0..j).fold(1i64, |acc, _| acc * k % p);
        let c = 1 + kj;
        self.m(&[[-k * c, -c], [0, -k * k % p * c]])
    }
}

/// M = [[0, 1], [1, 1]] ∈ GL₂(2).
pub fn klein_m() -> FqMatrix {
    FqMatrix::from_rows(2, &[vec![0, 1], vec![1, 1]])
}

/// 𝒢ₖ with elements v + p²·q.
pub fn build_gk(par: GkParams) -> Result<FiniteGroup, ConstructionError> {
    Ok(FiniteGroup::semidirect(2, par.p, &quaternion_group(), &par.rho())?)
}

/// 𝒢ₖ × ℤ₂² with elements g + |𝒢ₖ|·w.
pub fn build_gk_klein(par: GkParams) -> Result<FiniteGroup, ConstructionError> {
    Ok(FiniteGroup::direct(&build_gk(par)?, &FiniteGroup::vector(2, 2)))
}

fn check_j(j: u32) -> Result<(), ConstructionError> {
    if j == 1 || j == 2 {
        Ok(())
    } else {
        Err(ConstructionError::Domain(format!("j must be 1 or 2, got {j}")))
    }
}

/// Verifies F ρ_q = ρ_{φ(q)} F on every q ∈ 𝒬₈.
fn check_compatible(par: GkParams, f: &FqMatrix) -> Result<(), ConstructionError> {
    let rho = par.rho();
    for q in 0..8u32 {
        if f * &rho[q as usize] != &rho[q8::phi(q) as usize] * f {
            return Err(ConstructionError::Incompatible { q });
        }
    }
    Ok(())
}

/// f(j): x ↦ y, y ↦ xy, z ↦ z, and F_j on ℤ_p², as (v, q) ↦ (F_j v, φ(q)).
pub fn build_fj(par: GkParams, g: &FiniteGroup, j: u32) -> Result<GroupMap, ConstructionError> {
    check_j(j)?;
    let f = par.f_matrix(j);
    check_compatible(par, &f)?;
    let nv = (par.p * par.p) as Elem;
    let map = GroupMap::from_fn(g, |e| {
        let (v, q) = (e % nv, e / nv);
        let fv = vec_to_index(par.p, &f.mul_vec(&index_to_vec(par.p, 2, v as usize))) as Elem;
        fv + nv * q8::phi(q)
    });
    if !map.is_automorphism(g) {
        return Err(ConstructionError::NotAutomorphism("f(j)".into()));
    }
    Ok(map)
}

/// Twist a ∈ ℤ₂² of f(j, a), as the image of x in the ℤ₂² factor.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, serde::Serialize, serde::Deserialize)]
pub enum Twist {
    Zero,
    E1,
}

impl Twist {
    pub fn bits(self) -> u32 {
        match self {
            Twist::Zero => 0,
            Twist::E1 => 1,
        }
    }
}

/// f(j, a) on 𝒢ₖ × ℤ₂²: (v, q, w) ↦ (F_j v, φ(q), ψ_a(q) + M w) with
/// ψ_a(x) = a, ψ_a(y) = 0.
pub fn build_f_sr(par: GkParams, g: &FiniteGroup, j: u32, a: Twist) -> Result<GroupMap, ConstructionError> {
    check_j(j)?;
    let (gk, _) = g.factors().ok_or_else(|| ConstructionError::Domain("expected 𝒢ₖ × ℤ₂²".into()))?;
    let fj = build_fj(par, gk, j)?;
    let ngk = gk.order() as Elem;
    let nv = (par.p * par.p) as Elem;
    let m = klein_m();
    let map = GroupMap::from_fn(g, |e| {
        let (h, w) = (e % ngk, e / ngk);
        let q = h / nv;
        // ψ_a(q) = a·(coefficient of i in the class of q).
        let psi = if q8::klein_class(q) & 1 == 1 { a.bits() } else { 0 };
        let mw = vec_to_index(2, &m.mul_vec(&index_to_vec(2, 2, w as usize))) as Elem;
        fj.apply(h) + ngk * (psi ^ mw)
    });
    if !map.respects_generators(g, g) || !map.is_bijective() {
        return Err(ConstructionError::NotAutomorphism("f(j, a)".into()));
    }
    Ok(map)
}

/// f(j, a) extended from the generator images x ↦ ya, y ↦ xy, e ↦ F_j e on
/// ℤ_p² and c ↦ M c on ℤ₂², along Cayley-graph words.
pub fn build_f_sr_from_words(par: GkParams, g: &FiniteGroup, j: u32, a: Twist) -> Result<GroupMap, ConstructionError> {
    let (gk, _) = g.factors().ok_or_else(|| ConstructionError::Domain("expected 𝒢ₖ × ℤ₂²".into()))?;
    let p = par.p;
    let nv = p * p;
    let ngk = gk.order() as Elem;
    let x = nv * q8::I;
    let y = nv * q8::J;
    let e = [1, p];
    let c = [ngk, 2 * ngk];
    let f = par.f_matrix(j);
    let vec_elem = |col: usize| vec_to_index(p, &[f.get(0, col), f.get(1, col)]) as Elem;
    let m = klein_m();
    let klein = |col: usize| ngk * vec_to_index(2, &[m.get(0, col), m.get(1, col)]) as Elem;
    let gens = vec![x, y, e[0], e[1], c[0], c[1]];
    let images = vec![g.mul(y, a.bits() * ngk), g.mul(x, y), vec_elem(0), vec_elem(1), klein(0), klein(1)];
    Ok(extend_map(g, g, &gens, &images)?)
}

/// A coset quandle with its defining data.
#[derive(Clone, Debug)]
pub struct BuiltQuandle {
    pub spec: CosetSpec,
    pub coset: CosetQuandle,
}

fn build_coset(g: FiniteGroup, f: GroupMap) -> Result<BuiltQuandle, ConstructionError> {
    let fix: Subgroup = fix_subgroup(&g, &f);
    let spec = CosetSpec { group: g, subgroup: fix, f };
    let coset = coset_quandle_full(&spec)?;
    Ok(BuiltQuandle { spec, coset })
}

/// Q(p, j) = 𝒬(𝒢ₖ, Fix(f(j)), f(j)), of size 4p.
pub fn build_qpj(par: GkParams, j: u32) -> Result<BuiltQuandle, ConstructionError> {
    let g = build_gk(par)?;
    let f = build_fj(par, &g, j)?;
    build_coset(g, f)
}

/// 𝒬(𝒢ₖ × ℤ₂², Fix(f(j, a)), f(j, a)); a = E1 gives 𝔔(p, j) of size 16p.
pub fn build_sr(par: GkParams, j: u32, a: Twist) -> Result<BuiltQuandle, ConstructionError> {
    let g = build_gk_klein(par)?;
    let f = build_f_sr(par, &g, j, a)?;
    build_coset(g, f)
}
