use std::collections::HashSet;

use latinq::conglat::all_congruences;
use latinq::linfq::{factor_x_pow_p_minus_1, ord2_mod, F2Poly};
use latinq::pipeline::{chain_candidates, chain_search, module_classes, sr_family};
use latinq::quandle::{dis, QuandleTable};
use proptest::prelude::*;

/// f(x^t) mod g, by Horner's rule.
fn compose_mod(f: F2Poly, t: u32, g: F2Poly) -> F2Poly {
    let mut xt = F2Poly::ONE;
    for _ in 0..t {
        xt = xt.mul_mod(F2Poly::X.div_rem(g).1, g);
    }
    let mut acc = F2Poly(0);
    for i in (0..=f.degree().unwrap()).rev() {
        acc = acc.mul_mod(xt, g);
        if f.coeff(i) {
            acc = F2Poly(acc.0 ^ 1);
        }
    }
    acc
}

/// Number of orbits of multiplicity vectors under α ↦ αˢ, from root
/// substitution instead of companion matrices.
fn module_class_oracle(p: u32, n: usize) -> usize {
    let factors: Vec<F2Poly> =
        factor_x_pow_p_minus_1(p).unwrap().into_iter().filter(|f| f.degree() != Some(1)).collect();
    let d = ord2_mod(p) as usize;
    if !n.is_multiple_of(d) {
        return 0;
    }
    // The minimal polynomial of αˢ is the factor g with f(x^(s⁻¹)) ≡ 0 mod g.
    let twists: Vec<Vec<usize>> = (1..p)
        .map(|s| {
            let t = (1..p).find(|t| t * s % p == 1).unwrap();
            factors.iter().map(|&f| factors.iter().position(|&g| compose_mod(f, t, g).is_zero()).unwrap()).collect()
        })
        .collect();
    let mut vectors = vec![Vec::new()];
    for _ in 0..factors.len() {
        vectors = vectors
            .into_iter()
            .flat_map(|v: Vec<usize>| {
                let used: usize = v.iter().sum();
                (0..=n / d - used).map(move |m| [v.clone(), vec![m]].concat())
            })
            .collect();
    }
    let mut orbits = HashSet::new();
    for v in vectors.into_iter().filter(|v| v.iter().sum::<usize>() == n / d) {
        let mut orbit: Vec<Vec<usize>> = twists
            .iter()
            .map(|perm| {
                let mut w = vec![0; v.len()];
                for (i, &j) in perm.iter().enumerate() {
                    w[j] = v[i];
                }
                w
            })
            .collect();
        orbit.sort();
        orbits.insert(orbit);
    }
    orbits.len()
}

fn emitted_ok(q: &QuandleTable, size: usize, group_order: u128) -> bool {
    QuandleTable::new(q.size(), (0..q.size()).flat_map(|x| q.row(x).to_vec()).collect()).is_ok()
        && q.size() == size
        && q.is_latin()
        && q.is_connected()
        && dis(q).order() == group_order
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    #[test]
    fn module_classes_match_the_brute_orbit_count(
        p in prop::sample::select(vec![3u32, 5, 7, 17, 23, 31, 73, 127]),
        n in 1usize..=16,
    ) {
        prop_assert_eq!(module_classes(p, n).unwrap().len(), module_class_oracle(p, n));
    }
}

#[test]
fn module_classes_at_the_admissible_pairs() {
    for (p, n) in [(3, 4), (3, 6), (3, 8), (5, 4), (5, 8), (7, 6), (17, 8), (31, 5), (127, 7)] {
        assert_eq!(module_classes(p, n).unwrap().len(), module_class_oracle(p, n), "({p}, {n})");
    }
    assert_eq!(module_class_oracle(7, 6), 2);
}

#[test]
fn candidate_groups_are_centerless() {
    for (p, n) in [(3, 4), (5, 4), (7, 6), (31, 5)] {
        for c in chain_candidates(p, n).unwrap() {
            let g = c.group().unwrap();
            assert_eq!(g.order(), (1 << n) * p as usize);
            assert_eq!(g.center().order(), 1, "({p}, {n})");
        }
    }
}

#[test]
fn chain_search_output_is_verified() {
    for p in [3u32, 5] {
        let r = chain_search(p, 1).unwrap();
        assert_eq!(r.quandles.len(), 1);
        let q = &r.quandles[0];
        assert!(emitted_ok(q, 16 * p as usize, 16 * p as u128));
        let lat = all_congruences(q).unwrap();
        assert!(lat.is_chain() && lat.len() == 3);
    }
}

#[test]
fn sr_family_output_is_verified() {
    for m in sr_family(7).unwrap() {
        let q = m.table.as_ref().unwrap();
        assert!(emitted_ok(q, 112, 32 * 49));
        assert_eq!(all_congruences(q).unwrap().shape().tag(), "diamond");
    }
}
