use std::sync::OnceLock;

use latinq::constructions::aut::{aut_gk, in_family_f};
use latinq::constructions::{build_gk, build_q4, latin16_family, latin_p_family, GkParams};
use latinq::grpmodel::{fix_subgroup, Elem, FiniteGroup, GroupMap, Subgroup};
use latinq::linfq::FqMatrix;
use latinq::permgrp::{PermGroup, Permutation};
use latinq::quandle::{affine, coset_quandle, coset_quandle_full, direct_product, dis, lmlt, CosetSpec, QuandleTable};
use latinq::quiso::displacement_generates;
use proptest::prelude::*;

fn permutation(n: usize) -> impl Strategy<Value = Permutation> {
    Just((0..n).collect::<Vec<usize>>()).prop_shuffle().prop_map(|v| Permutation::from_images(&v).unwrap())
}

/// Table groups of order at most 120 from random permutations.
fn small_group() -> impl Strategy<Value = FiniteGroup> {
    (3usize..=5)
        .prop_flat_map(|n| prop::collection::vec(permutation(n), 1..=2).prop_map(move |g| (n, g)))
        .prop_map(|(n, gens)| FiniteGroup::from_perm_group(&PermGroup::closure(n, &gens).unwrap()).unwrap().0)
}

fn axioms_hold(q: &QuandleTable) -> bool {
    let n = q.size();
    let idempotent = (0..n).all(|x| q.star(x, x) == x);
    let left_bijective = (0..n).all(|x| {
        let mut seen = vec![false; n];
        (0..n).all(|y| !std::mem::replace(&mut seen[q.star(x, y)], true))
    });
    let distributive =
        (0..n).all(|x| (0..n).all(|y| (0..n).all(|z| q.star(x, q.star(y, z)) == q.star(q.star(x, y), q.star(x, z)))));
    idempotent && left_bijective && distributive
}

fn small_latin() -> Vec<QuandleTable> {
    let mut out = vec![build_q4()];
    out.extend(latin16_family().into_iter().take(3));
    for p in [3, 5, 7] {
        out.extend(latin_p_family(p).unwrap());
    }
    out
}

/// Random affine quandles Aff(𝔽_pⁿ, f), connected or not.
fn affine_quandle() -> impl Strategy<Value = QuandleTable> {
    (prop::sample::select(vec![(2u32, 2usize), (2, 3), (2, 4), (3, 2), (5, 2), (7, 1), (11, 1), (3, 3)]))
        .prop_flat_map(|(p, n)| prop::collection::vec(0..p, n * n).prop_map(move |v| (p, n, v)))
        .prop_filter_map("singular", |(p, n, v)| affine(&FqMatrix::from_fn(p, n, n, |r, c| v[r * n + c])).ok())
}

fn gk7() -> &'static (FiniteGroup, Vec<GroupMap>) {
    static CELL: OnceLock<(FiniteGroup, Vec<GroupMap>)> = OnceLock::new();
    CELL.get_or_init(|| {
        let par = GkParams::new(7).unwrap();
        let g = build_gk(par).unwrap();
        let family: Vec<GroupMap> = aut_gk(par, &g).unwrap().into_iter().filter(|h| in_family_f(par, &g, h)).collect();
        (g, family)
    })
}

fn check_lmlt_dis(q: &QuandleTable) -> Result<(), TestCaseError> {
    let (l, d) = (lmlt(q), dis(q));
    prop_assert!(d.is_normal_in(&l));
    let mut lo = l.orbits();
    let mut dos = d.orbits();
    lo.sort();
    dos.sort();
    if q.is_connected() {
        prop_assert_eq!(lo, dos);
        for x in 0..q.size() {
            // |Dis⟨L_x⟩| = |Dis|·|⟨L_x⟩| / |Dis ∩ ⟨L_x⟩|
            let lx = q.left_translation(x);
            let o = lx.order();
            let inside = (0..o).filter(|&k| d.contains(&lx.pow(k))).count() as u128;
            prop_assert_eq!(l.order() * inside, d.order() * o as u128);
        }
    }
    Ok(())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn coset_quandles_satisfy_the_axioms(g in small_group(), h in 0usize..120, picks in prop::collection::vec(0usize..120, 0..3)) {
        let h = (h % g.order()) as Elem;
        let f = GroupMap::from_fn(&g, |x| g.conjugate(h, x));
        let fix = fix_subgroup(&g, &f);
        let chosen: Vec<Elem> = picks.iter().map(|&i| fix.members()[i % fix.order()]).collect();
        let subgroup: Subgroup = g.closure(&chosen);
        let spec = CosetSpec { group: g.clone(), subgroup: subgroup.clone(), f };
        let q = coset_quandle(&spec).unwrap();
        prop_assert_eq!(q.size() * subgroup.order(), g.order());
        prop_assert!(axioms_hold(&q));
    }

    #[test]
    fn displacement_groups_of_products_multiply(i in 0usize..64, j in 0usize..64) {
        let all = small_latin();
        let (a, b) = (&all[i % all.len()], &all[j % all.len()]);
        let prod = direct_product(a, b).unwrap();
        let (da, db, d) = (dis(a), dis(b), dis(&prod));
        prop_assert_eq!(d.order(), da.order() * db.order());
        let nb = b.size();
        let first: Vec<Permutation> = d.gens().iter()
            .map(|g| Permutation::from_images(&(0..a.size()).map(|x| g.apply(x * nb) / nb).collect::<Vec<_>>()).unwrap())
            .collect();
        let second: Vec<Permutation> = d.gens().iter()
            .map(|g| Permutation::from_images(&(0..nb).map(|y| g.apply(y) % nb).collect::<Vec<_>>()).unwrap())
            .collect();
        prop_assert!(PermGroup::closure(a.size(), &first).unwrap().same_as(&da));
        prop_assert!(PermGroup::closure(nb, &second).unwrap().same_as(&db));
    }

    #[test]
    fn lmlt_factors_through_dis_on_affine_quandles(q in affine_quandle()) {
        check_lmlt_dis(&q)?;
    }

    #[test]
    fn lmlt_factors_through_dis_on_coset_quandles(i in 0usize..112) {
        let (g, family) = gk7();
        let f = family[i % family.len()].clone();
        let spec = CosetSpec { group: g.clone(), subgroup: fix_subgroup(g, &f), f };
        check_lmlt_dis(&coset_quandle(&spec).unwrap())?;
    }

    /// Dis(Q) is the image of ⟨g f(g)⁻¹⟩ acting on cosets, and equals G in
    /// size exactly when the displacements generate G.
    #[test]
    fn dis_is_the_image_of_the_displacement_subgroup(i in 0usize..112) {
        let (g, family) = gk7();
        let f = family[i % family.len()].clone();
        let spec = CosetSpec { group: g.clone(), subgroup: fix_subgroup(g, &f), f: f.clone() };
        let cq = coset_quandle_full(&spec).unwrap();
        let displacements: Vec<Elem> = (0..g.order() as Elem).map(|x| g.mul(x, g.inv(f.apply(x)))).collect();
        let sub = g.closure(&displacements);
        let act = |d: Elem| {
            let images: Vec<usize> = cq.reps.iter().map(|&r| cq.coset_of[g.mul(d, r) as usize] as usize).collect();
            Permutation::from_images(&images).unwrap()
        };
        let gens: Vec<Permutation> = g.subgroup_generators(&sub).into_iter().map(act).collect();
        let image = PermGroup::closure(cq.table.size(), &gens).unwrap();
        let d = dis(&cq.table);
        prop_assert!(image.same_as(&d));
        prop_assert_eq!(displacement_generates(g, &f), d.order() == g.order() as u128);
    }
}
