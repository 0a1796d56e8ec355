//! Search for latin quandles of size 16p whose congruence lattice is a
//! 3-element chain, over the centerless groups ℤ₂ⁿ ⋊_ρ ℤ_p.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::PipelineError;
use crate::conglat::all_congruences;
use crate::grpmodel::{Elem, FiniteGroup, GroupMap, Subgroup};
use crate::linfq::{
    block_diag, companion, factor_x_pow_p_minus_1, intertwiners, ord2_mod, vec_to_index, F2Poly, FqMatrix,
};
use crate::quandle::{coset_quandle, CosetSpec, QuandleTable};
use crate::quiso::dedupe;
use crate::util::is_prime;

/// Primes for which some ℤ₂ⁿ ⋊ ℤ_p with 4 ≤ n ≤ 8 is centerless.
pub const CHAIN_PRIMES: [u32; 6] = [3, 5, 7, 17, 31, 127];

/// Random A-samples per (twist, module class) when a case is too large to
/// enumerate.
pub const RANDOM_SAMPLES: usize = 1 << 16;

/// Largest solution-space dimension enumerated exhaustively.
pub const EXHAUSTIVE_DIM: usize = 20;

const SEED: u64 = 0x16_0003;

/// Largest n covered by a tier.
pub fn tier_limit(tier: u8) -> Result<usize, PipelineError> {
    match tier {
        1 => Ok(4),
        2 => Ok(6),
        3 => Ok(8),
        _ => Err(PipelineError::Argument(format!("tier must be 1, 2 or 3, got {tier}"))),
    }
}

/// Dimensions 4 ≤ n ≤ 8 admitting a fixed-point-free ℤ_p-action on ℤ₂ⁿ.
pub fn admissible_dimensions(p: u32) -> Vec<usize> {
    if p < 3 || !is_prime(p) {
        return Vec::new();
    }
    let d = ord2_mod(p) as usize;
    (4..=8).filter(|n| n % d == 0).collect()
}

/// A ℤ_p-module structure on ℤ₂ⁿ without trivial summand, and its group.
#[derive(Clone, Debug)]
pub struct ChainCandidate {
    pub p: u32,
    pub n: usize,
    /// Nontrivial irreducible factors of xᵖ − 1 over 𝔽₂.
    pub factors: Vec<F2Poly>,
    /// Multiplicity of each factor; Σ deg·mult = n.
    pub multiplicities: Vec<usize>,
    pub rho: FqMatrix,
}

impl ChainCandidate {
    pub fn group(&self) -> Result<FiniteGroup, PipelineError> {
        let powers: Vec<FqMatrix> = (0..self.p as u64).map(|i| self.rho.pow(i)).collect();
        Ok(FiniteGroup::semidirect(self.n, 2, &FiniteGroup::cyclic(self.p as usize), &powers)?)
    }
}

/// Nontrivial factors of xᵖ − 1 and, for each s, the permutation of them
/// induced by ρ ↦ ρˢ.
pub fn factor_twists(p: u32) -> Result<(Vec<F2Poly>, Vec<Vec<usize>>), PipelineError> {
    let factors: Vec<F2Poly> = factor_x_pow_p_minus_1(p)?.into_iter().filter(|f| f.degree() != Some(1)).collect();
    let comps: Vec<FqMatrix> = factors.iter().map(|&f| companion(f)).collect::<Result<_, _>>()?;
    let mut twists = Vec::new();
    for s in 1..p as u64 {
        let perm = comps
            .iter()
            .map(|c| {
                let cs = c.pow(s);
                factors.iter().position(|g| g.eval_matrix(&cs).is_zero()).expect("a power of a root is a root")
            })
            .collect();
        twists.push(perm);
    }
    Ok((factors, twists))
}

/// Multiplicity vectors for dimension n, one per orbit of the twist action;
/// each representative is the lexicographically largest in its orbit.
pub fn module_classes(p: u32, n: usize) -> Result<Vec<Vec<usize>>, PipelineError> {
    let (factors, twists) = factor_twists(p)?;
    let d = ord2_mod(p) as usize;
    if !n.is_multiple_of(d) {
        return Ok(Vec::new());
    }
    let mut out = Vec::new();
    for m in compositions(n / d, factors.len()) {
        let best = twists
            .iter()
            .map(|perm| {
                let mut t = vec![0; m.len()];
                for (i, &j) in perm.iter().enumerate() {
                    t[j] = m[i];
                }
                t
            })
            .max()
            .unwrap();
        if best == m {
            out.push(m);
        }
    }
    Ok(out)
}

/// All vectors of `parts` non-negative integers summing to `total`.
fn compositions(total: usize, parts: usize) -> Vec<Vec<usize>> {
    if parts == 0 {
        return if total == 0 { vec![Vec::new()] } else { Vec::new() };
    }
    let mut out = Vec::new();
    for first in (0..=total).rev() {
        for mut rest in compositions(total - first, parts - 1) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

/// One candidate per module class in dimension n.
pub fn chain_candidates(p: u32, n: usize) -> Result<Vec<ChainCandidate>, PipelineError> {
    let (factors, _) = factor_twists(p)?;
    module_classes(p, n)?
        .into_iter()
        .map(|m| {
            let mut blocks = Vec::new();
            for (f, &k) in factors.iter().zip(&m) {
                for _ in 0..k {
                    blocks.push(companion(*f)?);
                }
            }
            Ok(ChainCandidate { p, n, factors: factors.clone(), multiplicities: m, rho: block_diag(&blocks)? })
        })
        .collect()
}

/// How completely a (p, n) case was searched.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CaseCoverage {
    pub p: u32,
    pub n: usize,
    pub module_classes: usize,
    /// "exhaustive" or "canonical+randomized".
    pub method: String,
    pub exhaustive: bool,
    /// Matrices A examined over all twists s.
    pub automorphisms_examined: u64,
    /// Coset quandles built after the linear filters.
    pub quandles_built: u64,
    pub survivors: usize,
}

#[derive(Clone, Debug)]
pub struct ChainSearchResult {
    pub p: u32,
    pub tier: u8,
    pub cases: Vec<CaseCoverage>,
    /// Representatives of the latin 3-chain quandles found, pairwise
    /// non-isomorphic.
    pub quandles: Vec<QuandleTable>,
}

impl ChainSearchResult {
    pub fn exhaustive(&self) -> bool {
        self.cases.iter().all(|c| c.exhaustive)
    }
}

/// Latin 3-chain quandles 𝒬(G, Fix(f), f) of size 16p over the centerless
/// ℤ₂ⁿ ⋊ ℤ_p, for every admissible n within the tier.
pub fn chain_search(p: u32, tier: u8) -> Result<ChainSearchResult, PipelineError> {
    let limit = tier_limit(tier)?;
    if !is_prime(p) || p == 2 {
        return Err(PipelineError::Argument(format!("need an odd prime, got {p}")));
    }
    let mut cases = Vec::new();
    let mut found = Vec::new();
    for n in admissible_dimensions(p).into_iter().filter(|&n| n <= limit) {
        let mut cov = CaseCoverage {
            p,
            n,
            module_classes: 0,
            method: "exhaustive".into(),
            exhaustive: true,
            automorphisms_examined: 0,
            quandles_built: 0,
            survivors: 0,
        };
        let cands = chain_candidates(p, n)?;
        cov.module_classes = cands.len();
        let mut case_found = Vec::new();
        for cand in &cands {
            let stats = search_candidate(cand)?;
            cov.automorphisms_examined += stats.examined;
            cov.quandles_built += stats.built;
            if !stats.exhaustive {
                cov.exhaustive = false;
                cov.method = "canonical+randomized".into();
            }
            case_found.extend(stats.quandles);
        }
        let reps = dedupe(&case_found)?;
        cov.survivors = reps.len();
        found.extend(reps.into_iter().map(|i| case_found[i].clone()));
        cases.push(cov);
    }
    Ok(ChainSearchResult { p, tier, cases, quandles: found })
}

struct CandidateStats {
    examined: u64,
    built: u64,
    exhaustive: bool,
    quandles: Vec<QuandleTable>,
}

/// Enumerates f = (A, w, s) with Aρ = ρˢA, s ≠ 1.
///
/// s = 1 is skipped: f then induces the identity on G/ℤ₂ⁿ, so
/// ⟨g f(g)⁻¹⟩ ≤ ℤ₂ⁿ and the representation is not minimal.
fn search_candidate(cand: &ChainCandidate) -> Result<CandidateStats, PipelineError> {
    let g = cand.group()?;
    let mut stats = CandidateStats { examined: 0, built: 0, exhaustive: true, quandles: Vec::new() };
    for s in 2..cand.p as u64 {
        let rho_s = cand.rho.pow(s);
        let basis = intertwiners(&cand.rho, &rho_s)?;
        let dim = basis.len();
        let matrices: Vec<FqMatrix> = if dim <= EXHAUSTIVE_DIM {
            span(cand.n, &basis)
        } else {
            stats.exhaustive = false;
            let mut rng = ChaCha8Rng::seed_from_u64(SEED ^ (s << 32) ^ cand.n as u64);
            (0..RANDOM_SAMPLES)
                .map(|_| {
                    basis.iter().fold(FqMatrix::zeros(2, cand.n, cand.n), |acc, b| {
                        if rng.gen::<bool>() {
                            acc.try_add(b).expect("same shape")
                        } else {
                            acc
                        }
                    })
                })
                .collect()
        };
        stats.examined += matrices.len() as u64;
        let hits: Vec<(u64, Vec<QuandleTable>)> = matrices
            .par_iter()
            .filter(|a| passes_linear_filters(a, cand.n))
            .map(|a| quandles_for(cand, &g, a, s, &rho_s))
            .collect::<Result<_, _>>()?;
        for (built, qs) in hits {
            stats.built += built;
            stats.quandles.extend(qs);
        }
    }
    Ok(stats)
}

/// Every element of the 𝔽₂-span of `basis`.
fn span(n: usize, basis: &[FqMatrix]) -> Vec<FqMatrix> {
    let mut out = vec![FqMatrix::zeros(2, n, n)];
    for b in basis {
        let more: Vec<FqMatrix> = out.iter().map(|m| m.try_add(b).expect("same shape")).collect();
        out.extend(more);
    }
    out
}

/// A invertible with |ker(I − A)| = 2ⁿ⁻⁴, and im(I − A) ∩ ker(I − A) = 0.
///
/// The kernel is Fix(f), of order |G|/16p; the trivial intersection is
/// needed for the right translation at the base coset to be injective.
fn passes_linear_filters(a: &FqMatrix, n: usize) -> bool {
    if !a.is_invertible() {
        return false;
    }
    let d = a.identity_minus();
    n >= 4 && d.rank() == 4 && (&d * &d).rank() == 4
}

/// Complement of the span of `vectors` by standard basis vectors.
fn complement(n: usize, vectors: &[Vec<u32>]) -> Vec<Vec<u32>> {
    let mut rows: Vec<Vec<i64>> = vectors.iter().map(|v| v.iter().map(|&x| x as i64).collect()).collect();
    let mut out = Vec::new();
    for i in 0..n {
        let mut e = vec![0i64; n];
        e[i] = 1;
        let mut trial = rows.clone();
        trial.push(e.clone());
        if FqMatrix::from_rows(2, &trial).rank() == trial.len() {
            rows = trial;
            out.push(e.into_iter().map(|x| x as u32).collect());
        }
    }
    out
}

/// Quandles for the translation parts w of f = (A, w, s), one per class of
/// w modulo im((I − ρˢ)(I − A)), which conjugation by ℤ₂ⁿ leaves fixed.
fn quandles_for(
    cand: &ChainCandidate,
    g: &FiniteGroup,
    a: &FqMatrix,
    s: u64,
    rho_s: &FqMatrix,
) -> Result<(u64, Vec<QuandleTable>), PipelineError> {
    let n = cand.n;
    let shift = &rho_s.identity_minus() * &a.identity_minus();
    let comp = complement(n, &shift.image_basis());
    let nv = 1usize << n;
    let mut built = 0;
    let mut out = Vec::new();
    for mask in 0..(1u32 << comp.len()) {
        let mut w = vec![0u32; n];
        for (i, c) in comp.iter().enumerate() {
            if mask >> i & 1 == 1 {
                w.iter_mut().zip(c).for_each(|(x, y)| *x ^= y);
            }
        }
        let t_image = vec_to_index(2, &w) as Elem + (s as Elem) * nv as Elem;
        let f = automorphism(g, n, a, t_image);
        if !displacement_generates_greedy(g, &f) {
            continue;
        }
        let spec = CosetSpec { group: g.clone(), subgroup: fix(g, &f), f };
        let q = coset_quandle(&spec)?;
        built += 1;
        if q.size() != 16 * cand.p as usize || !q.is_latin() {
            continue;
        }
        let lattice = all_congruences(&q)?;
        if lattice.is_chain() && lattice.len() == 3 {
            out.push(q);
        }
    }
    Ok((built, out))
}

/// f(v, tⁱ) = (Av, 1)·f(t)ⁱ.
fn automorphism(g: &FiniteGroup, n: usize, a: &FqMatrix, t_image: Elem) -> GroupMap {
    let nv = 1 << n;
    let powers: Vec<Elem> = (0..(g.order() / nv) as i64).map(|i| g.pow(t_image, i)).collect();
    let av: Vec<Elem> = (0..nv)
        .map(|v| {
            let bits: Vec<u32> = (0..n).map(|i| (v >> i & 1) as u32).collect();
            vec_to_index(2, &a.mul_vec(&bits)) as Elem
        })
        .collect();
    GroupMap::from_fn(g, |e| g.mul(av[e as usize % nv], powers[e as usize / nv]))
}

fn fix(g: &FiniteGroup, f: &GroupMap) -> Subgroup {
    crate::grpmodel::fix_subgroup(g, f)
}

/// ⟨g f(g)⁻¹⟩ = G, growing the subgroup one new displacement at a time.
pub fn displacement_generates_greedy(g: &FiniteGroup, f: &GroupMap) -> bool {
    let mut gens = Vec::new();
    let mut sub = g.closure(&[]);
    for x in 0..g.order() as Elem {
        let d = g.mul(x, g.inv(f.apply(x)));
        if !sub.contains(d) {
            gens.push(d);
            sub = g.closure(&gens);
            if sub.order() == g.order() {
                return true;
            }
        }
    }
    sub.order() == g.order()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn admissible_pairs() {
        let pairs: Vec<(u32, Vec<usize>)> = CHAIN_PRIMES.iter().map(|&p| (p, admissible_dimensions(p))).collect();
        assert_eq!(
            pairs,
            vec![(3, vec![4, 6, 8]), (5, vec![4, 8]), (7, vec![6]), (17, vec![8]), (31, vec![5]), (127, vec![7]),]
        );
        assert!(admissible_dimensions(11).is_empty());
        assert!(admissible_dimensions(13).is_empty());
    }

    #[test]
    fn candidates_are_fixed_point_free_of_order_p() {
        for (p, n) in [(3, 4), (5, 4), (7, 6), (31, 5)] {
            for c in chain_candidates(p, n).unwrap() {
                assert!(c.rho.pow(p as u64).is_identity());
                assert!(c.rho.identity_minus().is_invertible());
            }
        }
        assert_eq!(module_classes(7, 6).unwrap().len(), 2);
        assert_eq!(module_classes(31, 5).unwrap().len(), 1);
    }
}
