use std::sync::OnceLock;

use latinq::constructions::aut::{aut_gk, generating_maps};
use latinq::constructions::{build_fj, build_gk, GkParams};
use latinq::grpmodel::{fix_subgroup, FiniteGroup, GroupMap};
use latinq::linfq::FqMatrix;
use latinq::pipeline::{default_corpus, quandle_checks, CorpusEntry};
use latinq::quandle::{affine, coset_quandle, CosetSpec, QuandleTable};
use latinq::quiso::{are_isomorphic, is_isomorphism, iso_via_conjugacy};
use proptest::prelude::*;

fn corpus() -> &'static Vec<CorpusEntry> {
    static CELL: OnceLock<Vec<CorpusEntry>> = OnceLock::new();
    CELL.get_or_init(|| default_corpus().unwrap().into_iter().filter(|e| e.table.size() <= 64).collect())
}

fn relabel(q: &QuandleTable, sigma: &[usize]) -> QuandleTable {
    let n = q.size();
    let mut star = vec![0u16; n * n];
    for x in 0..n {
        for y in 0..n {
            star[sigma[x] * n + sigma[y]] = sigma[q.star(x, y)] as u16;
        }
    }
    QuandleTable::new(n, star).unwrap()
}

struct Gk {
    g: FiniteGroup,
    auts: Vec<GroupMap>,
    gens: Vec<GroupMap>,
    f: [GroupMap; 2],
}

fn gk7() -> &'static Gk {
    static CELL: OnceLock<Gk> = OnceLock::new();
    CELL.get_or_init(|| {
        let par = GkParams::new(7).unwrap();
        let g = build_gk(par).unwrap();
        let auts = aut_gk(par, &g).unwrap();
        let gens = generating_maps(&auts).unwrap();
        let f = [build_fj(par, &g, 1).unwrap(), build_fj(par, &g, 2).unwrap()];
        Gk { g, auts, gens, f }
    })
}

fn coset(g: &FiniteGroup, f: &GroupMap) -> QuandleTable {
    coset_quandle(&CosetSpec { group: g.clone(), subgroup: fix_subgroup(g, f), f: f.clone() }).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn relabelled_quandles_are_isomorphic(i in 0usize..64, seed in prop::collection::vec(any::<u32>(), 64)) {
        let q = &corpus()[i % corpus().len()].table;
        let mut sigma: Vec<usize> = (0..q.size()).collect();
        sigma.sort_by_key(|&x| seed[x % seed.len()].wrapping_mul(x as u32 + 1));
        let r = relabel(q, &sigma);
        let phi = are_isomorphic(q, &r);
        prop_assert!(phi.as_ref().is_some_and(|phi| is_isomorphism(q, &r, phi)));
        let psi = are_isomorphic(&r, q);
        prop_assert!(psi.as_ref().is_some_and(|psi| is_isomorphism(&r, q, psi)));
        prop_assert!(are_isomorphic(q, q).is_some());
    }

    #[test]
    fn isomorphism_is_symmetric(i in 0usize..64, j in 0usize..64) {
        let c = corpus();
        let (a, b) = (&c[i % c.len()].table, &c[j % c.len()].table);
        prop_assert_eq!(are_isomorphic(a, b).is_some(), are_isomorphic(b, a).is_some());
    }

    /// Conjugate automorphisms give isomorphic quandles, and the two tests
    /// agree in both directions.
    #[test]
    fn conjugacy_matches_table_isomorphism(a in 0usize..2, b in 0usize..2, u in 0usize..7056, v in 0usize..7056) {
        let gk = gk7();
        let conj = |f: &GroupMap, k: usize| {
            let h = &gk.auts[k % gk.auts.len()];
            h.compose(f).compose(&h.inverse().unwrap())
        };
        let (f1, f2) = (conj(&gk.f[a], u), conj(&gk.f[b], v));
        let by_conjugacy = iso_via_conjugacy(&gk.g, &f1, &f2, &gk.gens).unwrap();
        let by_tables = are_isomorphic(&coset(&gk.g, &f1), &coset(&gk.g, &f2)).is_some();
        prop_assert_eq!(by_conjugacy, by_tables);
        prop_assert_eq!(by_conjugacy, a == b);
    }

    #[test]
    fn galois_invariants_hold_on_random_affine_quandles(
        (p, n, v) in prop::sample::select(vec![(2u32, 3usize), (2, 4), (3, 2), (5, 2), (7, 2), (3, 3)])
            .prop_flat_map(|(p, n)| prop::collection::vec(0..p, n * n).prop_map(move |v| (p, n, v))),
    ) {
        let Ok(table) = affine(&FqMatrix::from_fn(p, n, n, |r, c| v[r * n + c])) else {
            return Err(TestCaseError::reject("singular"));
        };
        let entry = CorpusEntry { name: format!("Aff(F{p}^{n})"), table };
        for c in quandle_checks(&entry).unwrap() {
            prop_assert!(c.passed, "{} {}", c.name, c.detail);
        }
    }
}
