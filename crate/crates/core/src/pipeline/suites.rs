//! Verification suites: automorphism counting for 𝔔(p, j), the appendix
//! lemmas on 2-group actions over ℤ_p, and the Galois/commutator
//! identities over a corpus of constructed quandles.

use std::collections::HashSet;
use std::time::Instant;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::PipelineError;
use crate::conglat::{
    all_congruences, dis_alpha, dis_sup_alpha, gamma, is_abelian_cong, is_central_cong, is_solvable, kernel_cong,
    orbit_cong, Congruence,
};
use crate::constructions::aut::{
    aut_gk, aut_gk_klein_generators, family_h, generated_order, generating_maps, in_family_f, in_family_h,
};
use crate::constructions::g3g5::{build_presented_quandle, realize, G3, G5};
use crate::constructions::k50::{build_k50, k50_no_centerless_rep};
use crate::constructions::{
    build_f_sr, build_fj, build_gk, build_gk_klein, build_q4, build_qpj, build_sr, latin16_family, latin_p_family,
    quaternion_group, GkParams, Twist,
};
use crate::grpmodel::{Elem, FiniteGroup, GroupMap};
use crate::permgrp::PermGroup;
use crate::quandle::{direct_product, dis, QuandleTable};
use crate::quiso::conjugacy_orbit;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckResult {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct SuiteReport {
    pub name: String,
    pub checks: Vec<CheckResult>,
    pub timing_ms: u64,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    fn push(&mut self, name: &str, passed: bool, detail: impl Into<String>) {
        self.checks.push(CheckResult { name: name.into(), passed, detail: detail.into() });
    }

    fn count(&mut self, name: &str, got: u128, want: u128) {
        self.push(name, got == want, format!("{got} (expected {want})"));
    }
}

/// Largest prime for the counting suite; Aut(𝒢ₖ) is enumerated over
/// triples of generator images.
pub const COUNTING_MAX_P: u32 = 7;

/// Automorphism counts behind the isomorphism classification of 𝔔(p, j).
pub fn counting_suite(p: u32) -> Result<SuiteReport, PipelineError> {
    if p > COUNTING_MAX_P {
        return Err(PipelineError::Argument(format!("counting suite is limited to p ≤ {COUNTING_MAX_P}")));
    }
    let start = Instant::now();
    let par = GkParams::new(p)?;
    let p128 = p as u128;
    let mut r = SuiteReport { name: "counting".into(), checks: Vec::new(), timing_ms: 0 };
    let g = build_gk(par)?;
    let auts = aut_gk(par, &g)?;
    r.count("|Aut(Gk)| = 24p²(p−1)", auts.len() as u128, 24 * p128 * p128 * (p128 - 1));
    let gens = generating_maps(&auts)?;
    r.count("enumerated automorphisms form a group", generated_order(&gens)?, auts.len() as u128);
    let family_f: Vec<GroupMap> = auts.par_iter().filter(|h| in_family_f(par, &g, h)).cloned().collect();
    r.count("|F| = 16p", family_f.len() as u128, 16 * p128);
    for j in [1, 2] {
        let f = build_fj(par, &g, j)?;
        let centralizer = auts.iter().filter(|h| h.compose(&f) == f.compose(h)).count();
        r.count(&format!("|C(f({j}))| = 3p(p−1)"), centralizer as u128, 3 * p128 * (p128 - 1));
    }

    let gz = build_gk_klein(par)?;
    let big_gens = aut_gk_klein_generators(par, &gz, &gens);
    r.count("|Aut(Gk × Z2²)| = 2304p²(p−1)", generated_order(&big_gens)?, 2304 * p128 * p128 * (p128 - 1));
    let family = family_h(par, &gz, &family_f);
    let distinct: HashSet<&[Elem]> = family.iter().map(|h| h.images()).collect();
    let members = family.par_iter().all(|h| in_family_h(par, &g, h));
    r.push("parametrized H satisfies the defining conditions", members, format!("{} maps", family.len()));
    r.count("|H| = 2⁹p", distinct.len() as u128, 512 * p128);

    let mut covered: HashSet<Vec<Elem>> = HashSet::new();
    let mut sizes = Vec::new();
    for a in [Twist::Zero, Twist::E1] {
        for j in [1, 2] {
            let f = build_f_sr(par, &gz, j, a)?;
            let orbit = conjugacy_orbit(&f, &big_gens);
            let want = if a == Twist::Zero { 64 * p128 } else { 192 * p128 };
            r.count(&format!("conjugacy orbit of f({j}, {a:?})"), orbit.len() as u128, want);
            let inside = orbit.iter().all(|h| distinct.contains(h.images()));
            r.push(&format!("orbit of f({j}, {a:?}) lies in H"), inside, "");
            sizes.push(orbit.len());
            covered.extend(orbit.into_iter().map(|h| h.images().to_vec()));
        }
    }
    r.count("orbits partition H", covered.len() as u128, 512 * p128);
    r.push("2(2⁶p + 3·2⁶p) = 2⁹p", sizes.iter().sum::<usize>() as u128 == 512 * p128, format!("{sizes:?}"));
    r.timing_ms = start.elapsed().as_millis() as u64;
    Ok(r)
}

/// Square matrix over ℤ_p, row-major.
type Mat = Vec<u32>;

fn mat_mul(p: u32, n: usize, a: &[u32], b: &[u32]) -> Mat {
    let mut out = vec![0u32; n * n];
    for i in 0..n {
        for j in 0..n {
            let s: u64 = (0..n).map(|k| a[i * n + k] as u64 * b[k * n + j] as u64).sum();
            out[i * n + j] = (s % p as u64) as u32;
        }
    }
    out
}

fn identity(n: usize) -> Mat {
    (0..n * n).map(|i| (i % (n + 1) == 0) as u32).collect()
}

fn rank(p: u32, n: usize, a: &[u32]) -> usize {
    let rows: Vec<Vec<i64>> = (0..n).map(|i| a[i * n..(i + 1) * n].iter().map(|&x| x as i64).collect()).collect();
    crate::linfq::FqMatrix::from_rows(p, &rows).rank()
}

fn shifted(p: u32, n: usize, a: &[u32], c: u32) -> Mat {
    a.iter().enumerate().map(|(i, &x)| if i % (n + 1) == 0 { (x + c) % p } else { x }).collect()
}

/// Every matrix in GL_n(p) with A² = I.
fn involutions(p: u32, n: usize) -> Vec<Mat> {
    let total = (p as u64).pow((n * n) as u32);
    let id = identity(n);
    (0..total)
        .into_par_iter()
        .filter_map(|mut code| {
            let mut a = vec![0u32; n * n];
            for x in a.iter_mut() {
                *x = (code % p as u64) as u32;
                code /= p as u64;
            }
            (mat_mul(p, n, &a, &a) == id).then_some(a)
        })
        .collect()
}

/// Largest m with m commuting involutions generating ℤ₂ᵐ, searched over
/// all involutions with the first one restricted to diagonal ±1 class
/// representatives.
fn max_elementary_rank(p: u32, n: usize, invs: &[Mat]) -> usize {
    fn commutes(p: u32, n: usize, a: &[u32], b: &[u32]) -> bool {
        mat_mul(p, n, a, b) == mat_mul(p, n, b, a)
    }
    // `cands` commute with every element of `group` and lie outside it.
    fn grow(p: u32, n: usize, group: &[Mat], cands: &[Mat], rank: usize, best: &mut usize) {
        *best = (*best).max(rank);
        if rank > n {
            return;
        }
        for (i, a) in cands.iter().enumerate() {
            let mut next_group = group.to_vec();
            next_group.extend(group.iter().map(|g| mat_mul(p, n, g, a)));
            let next: Vec<Mat> =
                cands[i + 1..].iter().filter(|b| commutes(p, n, a, b) && !next_group.contains(b)).cloned().collect();
            grow(p, n, &next_group, &next, rank + 1, best);
        }
    }
    let mut best = 0;
    for k in 1..=n {
        let first: Mat = (0..n * n)
            .map(|i| {
                if i % (n + 1) != 0 {
                    0
                } else if i / (n + 1) < k {
                    p - 1
                } else {
                    1
                }
            })
            .collect();
        let group = vec![identity(n), first.clone()];
        let cands: Vec<Mat> =
            invs.iter().filter(|b| commutes(p, n, &first, b) && !group.contains(b)).cloned().collect();
        grow(p, n, &group, &cands, 1, &mut best);
    }
    best
}

/// Faithful ρ: K → GL_n(p) for K generated by a, b with b a b⁻¹ = a⁻¹, by
/// images of a and b.
fn faithful_reps(k: &FiniteGroup, gens: [Elem; 2], p: u32, n: usize) -> Vec<Vec<Mat>> {
    debug_assert_eq!(k.conjugate(gens[1], gens[0]), k.inv(gens[0]));
    let words = crate::grpmodel::cayley_words(k, &gens).expect("generators");
    let total = (p as u64).pow((n * n) as u32);
    let id = identity(n);
    let orders: Vec<usize> = gens.iter().map(|&g| k.element_order(g)).collect();
    let order_of = |a: &Mat| {
        let mut x = a.clone();
        let mut e = 1;
        while x != id && e <= 64 {
            x = mat_mul(p, n, &x, a);
            e += 1;
        }
        e
    };
    let decode = |mut code: u64| -> Mat {
        let mut a = vec![0u32; n * n];
        for x in a.iter_mut() {
            *x = (code % p as u64) as u32;
            code /= p as u64;
        }
        a
    };
    let cands: Vec<Vec<Mat>> = orders
        .iter()
        .map(|&o| (0..total).into_par_iter().map(decode).filter(|a| rank(p, n, a) == n && order_of(a) == o).collect())
        .collect();
    cands[0]
        .par_iter()
        .flat_map_iter(|a| {
            let mut out = Vec::new();
            let a_inv = (1..orders[0]).fold(identity(n), |acc, _| mat_mul(p, n, &acc, a));
            for b in &cands[1] {
                if mat_mul(p, n, b, a) != mat_mul(p, n, &a_inv, b) {
                    continue;
                }
                let imgs = [a, b];
                let mut rho = vec![identity(n); k.order()];
                for &x in words.order.iter().skip(1) {
                    let par = words.parent[x as usize] as usize;
                    rho[x as usize] = mat_mul(p, n, &rho[par], imgs[words.gen[x as usize] as usize]);
                }
                let hom = (0..k.order()).all(|x| {
                    (0..k.order()).all(|y| rho[k.mul(x as Elem, y as Elem) as usize] == mat_mul(p, n, &rho[x], &rho[y]))
                });
                let faithful = rho.iter().skip(1).all(|m| *m != identity(n));
                if hom && faithful {
                    out.push(rho);
                }
            }
            out
        })
        .collect()
}

/// D₈ with the generators r, s.
fn dihedral() -> FiniteGroup {
    crate::constructions::k50::dihedral8()
}

/// The appendix lemmas on actions of 2-groups on ℤ_pⁿ, checked on small
/// cases, and the K₅₀ non-representability search at p = 7.
pub fn appendix_suite() -> Result<SuiteReport, PipelineError> {
    let start = Instant::now();
    let mut r = SuiteReport { name: "appendix".into(), checks: Vec::new(), timing_ms: 0 };
    for n in [2usize, 3] {
        for p in [3u32, 5, 7] {
            let invs = involutions(p, n);
            let diag =
                invs.iter().all(|a| rank(p, n, &shifted(p, n, a, p - 1)) + rank(p, n, &shifted(p, n, a, 1)) == n);
            r.push(&format!("involutions of GL_{n}({p}) are diagonalizable"), diag, format!("{} checked", invs.len()));
            let m = max_elementary_rank(p, n, &invs);
            r.push(&format!("faithful Z2^m on Z_{p}^{n} needs m ≤ {n}"), m == n, format!("largest m = {m}"));
        }
    }

    // Center = −1: faithful ρ of Q₈ and D₈ whose derived subgroup ⟨z⟩ fixes
    // no nonzero vector.
    let mut instances = 0;
    let mut holds = true;
    for (name, k, gens) in [("Q8", quaternion_group(), [1, 2]), ("D8", dihedral(), [1, 4])] {
        let derived = k.derived_subgroup();
        let z = derived.members().iter().copied().find(|&x| x != 0).expect("nonabelian");
        let cases: &[(u32, usize)] = &[(3, 2), (5, 2), (7, 2), (3, 3)];
        for &(p, n) in cases {
            for rho in faithful_reps(&k, gens, p, n) {
                let rz = &rho[z as usize];
                if rank(p, n, &shifted(p, n, rz, p - 1)) < n {
                    continue;
                }
                instances += 1;
                let minus: Mat = identity(n).iter().map(|&x| (p - x) % p).collect();
                if *rz != minus || n % 2 != 0 {
                    holds = false;
                    r.push("ρ_z = −I with n even", false, format!("{name} on Z_{p}^{n}"));
                }
            }
        }
    }
    r.push("ρ_z = −I and n even on every instance", holds && instances > 0, format!("{instances} instances"));

    let (k50, _) = build_k50()?;
    let two_groups = [
        ("Q8", quaternion_group()),
        ("D8", dihedral()),
        ("K50", k50.clone()),
        ("Q8 x Z2^2", FiniteGroup::direct(&quaternion_group(), &FiniteGroup::vector(2, 2))),
    ];
    for (name, k) in two_groups {
        let lcs = k.lower_central_series();
        let class2 = lcs.len() == 3 && lcs[2].order() == 1;
        let derived = k.derived_subgroup();
        let elementary = derived.members().iter().all(|&x| k.mul(x, x) == 0);
        r.push(&format!("derived subgroup of {name} is elementary"), class2 && elementary, "");
    }
    let center = k50.center();
    r.push(
        "Z(K50) = [K50, K50] of order 2",
        center.order() == 2 && center == k50.derived_subgroup(),
        format!("|K50| = {}", k50.order()),
    );
    r.push("K50 has no centerless faithful action on Z_7^2", k50_no_centerless_rep(7)?, "");
    r.timing_ms = start.elapsed().as_millis() as u64;
    Ok(r)
}

/// A named quandle of the verification corpus.
#[derive(Clone, Debug)]
pub struct CorpusEntry {
    pub name: String,
    pub table: QuandleTable,
}

/// Quandles built by the constructions: the affine inventories, Q₄, Q(7, j),
/// 𝔔(7, j), the size-48 and size-80 chain quandles and some products.
pub fn default_corpus() -> Result<Vec<CorpusEntry>, PipelineError> {
    let mut out = Vec::new();
    let mut add = |name: String, table: QuandleTable| out.push(CorpusEntry { name, table });
    add("Q4".into(), build_q4());
    for (i, q) in latin16_family().into_iter().enumerate() {
        add(format!("latin16[{i}]"), q);
    }
    for p in [3u32, 5, 7] {
        for (i, q) in latin_p_family(p)?.into_iter().enumerate() {
            add(format!("Aff(Z{p},{})", i + 2), q);
        }
    }
    let par = GkParams::new(7)?;
    for j in [1, 2] {
        add(format!("Q(7,{j})"), build_qpj(par, j)?.coset.table);
        add(format!("SR(7,{j})"), build_sr(par, j, Twist::E1)?.coset.table);
    }
    add("SR(7,1) a=0".into(), build_sr(par, 1, Twist::Zero)?.coset.table);
    for (name, pair) in [("Q3", G3), ("Q5", G5)] {
        add(name.into(), build_presented_quandle(&realize(&pair)?)?.coset.table);
    }
    let q4 = build_q4();
    let a3 = latin_p_family(3)?.remove(0);
    let a5 = latin_p_family(5)?.remove(0);
    add("Q4 x Aff(Z3,2)".into(), direct_product(&q4, &a3)?);
    add("Q4 x Aff(Z5,2)".into(), direct_product(&q4, &a5)?);
    add("latin16[0] x Aff(Z3,2)".into(), direct_product(&latin16_family()[0], &a3)?);
    add("latin16[5] x Aff(Z3,2)".into(), direct_product(&latin16_family()[5], &a3)?);
    Ok(out)
}

/// Pairs of lattice elements tested for the two-argument identities.
const PAIR_BUDGET: usize = 400;

/// Galois identities and commutator criteria on every corpus quandle.
pub fn galois_suite(corpus: &[CorpusEntry]) -> Result<SuiteReport, PipelineError> {
    let start = Instant::now();
    let results: Vec<Vec<CheckResult>> = corpus.par_iter().map(quandle_checks).collect::<Result<_, PipelineError>>()?;
    let mut r = SuiteReport { name: "galois".into(), checks: results.into_iter().flatten().collect(), timing_ms: 0 };
    r.push("corpus has at least 30 quandles", corpus.len() >= 30, format!("{}", corpus.len()));
    r.timing_ms = start.elapsed().as_millis() as u64;
    Ok(r)
}

fn is_cyclic(g: &PermGroup) -> Result<bool, PipelineError> {
    Ok(g.is_abelian() && g.element_orders()?.last().is_none_or(|&o| o as u128 == g.order()))
}

/// Prime-power order with every nontrivial element of that prime order.
fn elementary_abelian(g: &PermGroup) -> Result<bool, PipelineError> {
    if g.order() == 1 {
        return Ok(true);
    }
    let orders = g.element_orders()?;
    let prime = orders[1];
    Ok(g.is_abelian() && orders.iter().skip(1).all(|&o| o == prime) && crate::util::is_prime(prime as u32))
}

/// Sylow subgroups of a nilpotent group: q-parts of the generators
/// generate the Sylow q-subgroup.
fn sylow_parts(g: &PermGroup) -> Vec<PermGroup> {
    let mut primes = Vec::new();
    let mut m = g.order();
    let mut q = 2;
    while m > 1 {
        if m.is_multiple_of(q) {
            primes.push(q);
            while m.is_multiple_of(q) {
                m /= q;
            }
        }
        q += 1;
    }
    primes
        .into_iter()
        .map(|q| {
            let parts: Vec<_> = g
                .gens()
                .iter()
                .map(|x| {
                    let mut o = x.order() as u128;
                    while o.is_multiple_of(q) {
                        o /= q;
                    }
                    x.pow(o as u64)
                })
                .collect();
            PermGroup::closure(g.degree(), &parts).expect("subgroup of a valid group")
        })
        .collect()
}

/// Galois-connection and commutator checks on one quandle.
pub fn quandle_checks(e: &CorpusEntry) -> Result<Vec<CheckResult>, PipelineError> {
    let q = &e.table;
    let mut out = Vec::new();
    let mut push = |name: &str, passed: bool, detail: String| {
        out.push(CheckResult { name: format!("{}: {name}", e.name), passed, detail })
    };
    let lat = all_congruences(q)?;
    let cons: Vec<&Congruence> = (0..lat.len()).map(|i| lat.get(i)).collect();
    let d_alpha: Vec<PermGroup> = cons.iter().map(|a| dis_alpha(q, a)).collect::<Result<_, _>>()?;

    let mut sandwich = true;
    let mut latin_eq = true;
    for (a, da) in cons.iter().zip(&d_alpha) {
        let o = orbit_cong(q, da)?;
        let c = kernel_cong(q, da)?;
        sandwich &= o.leq(a) && a.leq(&c);
        latin_eq &= !q.is_latin() || (o == **a && c == **a);
        for n in [da.clone(), dis_sup_alpha(q, a)?] {
            let on = orbit_cong(q, &n)?;
            let cn = kernel_cong(q, &n)?;
            let lower = dis_alpha(q, &on)?;
            let middle = dis_alpha(q, &cn)?;
            let upper = dis_sup_alpha(q, &on)?;
            sandwich &= lower.is_subgroup_of(&middle) && middle.is_subgroup_of(&n) && n.is_subgroup_of(&upper);
        }
    }
    push("sandwich inequalities", sandwich, format!("{} congruences", cons.len()));
    if q.is_latin() {
        push("O(Dis_α) = α = c(Dis_α)", latin_eq, String::new());
    }

    let mut pairs = 0;
    let mut identities = true;
    'outer: for i in 0..cons.len() {
        for j in i + 1..cons.len() {
            if pairs == PAIR_BUDGET {
                break 'outer;
            }
            pairs += 1;
            let join = cons[i].join(cons[j]);
            identities &= dis_alpha(q, &join)?.same_as(&d_alpha[i].join(&d_alpha[j]));
            let (n, m) = (&d_alpha[i], &d_alpha[j]);
            let meet = n.intersection(m)?;
            identities &= kernel_cong(q, &meet)? == kernel_cong(q, n)?.meet(&kernel_cong(q, m)?);
            identities &= orbit_cong(q, &n.join(m))? == orbit_cong(q, n)?.join(&orbit_cong(q, m)?);
        }
    }
    push("Dis_{α∨β}, c_{N∩M}, O_{NM} identities", identities, format!("{pairs} pairs"));

    // Hypotheses: Q faithful and α abelian.
    let mut minimal_ok = true;
    let faithful = q.is_faithful();
    for a in lat.atoms() {
        if !faithful || !is_abelian_cong(q, cons[a])? {
            continue;
        }
        let da = &d_alpha[a];
        let ea = elementary_abelian(da)?;
        let prime = if da.order() > 1 { da.element_orders()?[1] as usize } else { 1 };
        let blocks_ok = cons[a].block_sizes().iter().all(|&s| {
            let mut s = s;
            while prime > 1 && s % prime == 0 {
                s /= prime;
            }
            s == 1
        });
        minimal_ok &= ea && blocks_ok;
    }
    push("minimal congruences have elementary abelian Dis_α", minimal_ok, format!("{} atoms", lat.atoms().len()));

    let d = dis(q);
    if d.is_nilpotent() {
        let parts = sylow_parts(&d);
        let orbits: Vec<Congruence> = parts.iter().map(|s| orbit_cong(q, s)).collect::<Result<_, _>>()?;
        let disjoint = (0..orbits.len()).all(|i| (i + 1..orbits.len()).all(|j| orbits[i].meet(&orbits[j]).is_bottom()));
        push("Sylow orbit partitions meet trivially", disjoint, format!("{} primes", parts.len()));
    }

    if !lat.is_directly_decomposable() && lat.len() > 2 {
        let (nu, mu) = (lat.get(lat.nu), lat.get(lat.mu));
        push("ν ≤ μ", nu.leq(mu), String::new());
    }
    let atoms = lat.atoms();
    let coatoms = lat.coatoms();
    let slim = (0..lat.len()).all(|i| i == 0 || i == lat.len() - 1 || atoms.contains(&i) || coatoms.contains(&i));
    push("height ≤ 4 iff Con = Min ∪ Max ∪ {0, 1}", (lat.height() <= 4) == slim, format!("height {}", lat.height()));

    if q.is_faithful() {
        let mut cyclic_central = true;
        let mut gamma_central = true;
        let g = if q.is_connected() { Some(gamma(q)?) } else { None };
        for (a, da) in cons.iter().zip(&d_alpha) {
            if is_cyclic(da)? {
                cyclic_central &= is_central_cong(q, a)?;
            }
            if let Some(g) = &g {
                if a.meet(g).is_bottom() {
                    let quotient = crate::quandle::quotient(q, &a.labels())?;
                    gamma_central &=
                        is_central_cong(q, a)? && da.same_as(&dis_sup_alpha(q, a)?) && quotient.is_faithful();
                }
            }
        }
        push("cyclic Dis_α implies α central", cyclic_central, String::new());
        if g.is_some() {
            push("α ∧ γ = 0 implies α central, Dis_α = Dis^α, Q/α faithful", gamma_central, String::new());
        }
    }
    if q.is_latin() {
        push("latin implies solvable", is_solvable(q), String::new());
    }
    Ok(out)
}
