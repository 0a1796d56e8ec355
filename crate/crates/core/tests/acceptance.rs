//! One pass/fail line per acceptance criterion. Run with `--nocapture` to
//! see the lines.

use std::collections::HashSet;
use std::time::{Duration, Instant};

use latinq::constructions::g3g5::{build_presented_quandle, realize, G3, G5};
use latinq::constructions::{latin16_family, latin_p_family};
use latinq::pipeline::{
    appendix_suite, chain_search, counting_suite, decomposition_witness, default_corpus, galois_suite, lss4p_family,
    sr_family, table1, zeta_quotient_map, SuiteReport, Table1Options, CHAIN_PRIMES,
};
use latinq::quandle::{dis, QuandleTable};
use latinq::quiso::are_isomorphic;

type Outcome = Result<String, String>;

fn check(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn within(t: Instant, limit: Duration, what: &str) -> Result<(), String> {
    let e = t.elapsed();
    check(e <= limit, || format!("{what} took {e:.1?}, limit {limit:?}"))
}

fn err<E: std::fmt::Display>(e: E) -> String {
    e.to_string()
}

fn pairwise_distinct(qs: &[QuandleTable]) -> bool {
    (0..qs.len()).all(|i| (i + 1..qs.len()).all(|j| are_isomorphic(&qs[i], &qs[j]).is_none()))
}

fn suite_values(r: &SuiteReport) -> String {
    r.checks.iter().map(|c| format!("{} {}", c.name, c.detail)).collect::<Vec<_>>().join("\n")
}

fn criterion_1() -> Outcome {
    let start = Instant::now();
    let expected = [(3, (1, 9, 0)), (5, (1, 27, 0)), (7, (0, 47, 2)), (11, (0, 81, 0)), (13, (0, 101, 2))];
    let mut rows = Vec::new();
    for (p, (si, dd, sr)) in expected {
        let r = table1(p, &Table1Options::default()).map_err(err)?;
        let c = &r.counts;
        check((c.si, c.dd, c.sr_not_dd) == (si, dd, sr), || format!("p = {p}: got {c:?}"))?;
        check(r.families.len() == si + dd + sr, || format!("p = {p}: family list length"))?;
        let want = if p <= 7 { "full" } else { "fingerprint+spot-checks" };
        check(r.coverage.pairwise_verification == want, || format!("p = {p}: {}", r.coverage.pairwise_verification))?;
        rows.push(format!("{p}:({si},{dd},{sr})"));
    }
    within(start, Duration::from_secs(600), "Table 1")?;
    Ok(format!("{} in {:.0?}", rows.join(" "), start.elapsed()))
}

fn criterion_2() -> Outcome {
    let start = Instant::now();
    let mut found = Vec::new();
    for p in CHAIN_PRIMES {
        let r = chain_search(p, 2).map_err(err)?;
        check(r.exhaustive(), || format!("p = {p}: tier 2 not exhaustive"))?;
        found.extend(r.quandles);
    }
    let sizes: Vec<usize> = found.iter().map(|q| q.size()).collect();
    check(sizes == [48, 80], || format!("sizes {sizes:?}"))?;
    for (q, pair) in found.iter().zip([&G3, &G5]) {
        let presented = build_presented_quandle(&realize(pair).map_err(err)?).map_err(err)?.coset.table;
        check(are_isomorphic(q, &presented).is_some(), || format!("size {} not the presented quandle", q.size()))?;
    }
    within(start, Duration::from_secs(300), "chain search")?;
    Ok(format!("two quandles of sizes 48 and 80, matching G3 and G5, in {:.0?}", start.elapsed()))
}

fn criterion_3() -> Outcome {
    for p in [7u32, 13] {
        let start = Instant::now();
        let members = sr_family(p).map_err(err)?;
        check(members.len() == 2, || format!("p = {p}: {} members", members.len()))?;
        let p2 = (p as u128).pow(2);
        for m in &members {
            let q = m.table.as_ref().unwrap();
            check(q.size() == 16 * p as usize && q.is_latin(), || format!("SR({p},{}) size or latin", m.j))?;
            check(m.shape.tag() == "diamond", || format!("SR({p},{}) shape {:?}", m.j, m.shape))?;
            let sizes = (m.gamma_quotient, m.zeta_quotient, m.nu_quotient);
            check(sizes == (16, 4 * p as usize, 4), || format!("SR({p},{}) quotients {sizes:?}", m.j))?;
            check(dis(q).order() == 32 * p2 && m.dis_order == 32 * p2, || format!("SR({p},{}) |Dis|", m.j))?;
            check(m.dis_center_order == 4 && m.dis_center_elementary, || format!("SR({p},{}) Z(Dis)", m.j))?;
            check(m.dis_mod_gamma2_is_q8_klein, || format!("SR({p},{}) Dis/γ₂", m.j))?;
            check(!m.directly_decomposable, || format!("SR({p},{}) decomposable", m.j))?;
        }
        let (a, b) = (members[0].table.as_ref().unwrap(), members[1].table.as_ref().unwrap());
        check(are_isomorphic(a, b).is_none(), || format!("SR({p},1) ≅ SR({p},2)"))?;
        within(start, Duration::from_secs(120), &format!("SR family at p = {p}"))?;
    }
    Ok("SR(p,j) for p = 7, 13 latin, diamond (16, 4p, 4), |Dis| = 32p², Z(Dis) = Z2², DI, non-isomorphic".into())
}

fn criterion_4() -> Outcome {
    let mut maps = Vec::new();
    for p in [7u32, 13] {
        let lss = lss4p_family(p).map_err(err)?;
        check(lss.len() == 2, || format!("p = {p}: {} members", lss.len()))?;
        for q in &lss {
            check(q.size() == 4 * p as usize && q.is_latin(), || format!("p = {p}: size or latin"))?;
            check(dis(q).order() == 8 * (p as u128).pow(2), || format!("p = {p}: |Dis|"))?;
        }
        let map = zeta_quotient_map(p).map_err(err)?;
        check(map.len() == 2 && map.iter().all(|&(_, jj)| jj == 1 || jj == 2), || format!("p = {p}: {map:?}"))?;
        maps.push(format!("p={p} {map:?}"));
    }
    check(lss4p_family(11).map_err(err)?.is_empty(), || "Q(11, j) exists".into())?;
    Ok(format!("Q(p,j) for p = 7, 13, none at 11; (j, j′) with SR(p,j)/ζ ≅ Q(p,j′): {}", maps.join(", ")))
}

fn criterion_5() -> Outcome {
    let mut seen = Vec::new();
    for p in [7u32, 13] {
        for j in [1, 2] {
            let (q, dd, jj) = decomposition_witness(p, j).map_err(err)?;
            check(q.size() == 16 * p as usize && q.is_latin(), || format!("a = 0 variant at ({p},{j}) not latin"))?;
            check(dd, || format!("a = 0 variant at ({p},{j}) not flagged decomposable"))?;
            let jj = jj.ok_or_else(|| format!("a = 0 variant at ({p},{j}) is no Q4 × Q({p},j′)"))?;
            seen.push(format!("({p},{j})→Q4×Q({p},{jj})"));
        }
    }
    Ok(seen.join(" "))
}

fn criterion_6() -> Outcome {
    let start = Instant::now();
    let r = counting_suite(7).map_err(err)?;
    let failed: Vec<&str> = r.checks.iter().filter(|c| !c.passed).map(|c| c.name.as_str()).collect();
    check(failed.is_empty(), || format!("failed: {failed:?}"))?;
    let text = suite_values(&r);
    for v in ["7056", "112", "677376", "3584", "[448, 448, 1344, 1344]"] {
        check(text.contains(v), || format!("value {v} not reported"))?;
    }
    within(start, Duration::from_secs(300), "counting suite")?;
    Ok(format!("{} checks, |Aut| 7056, |F| 112, 677376, |H| 3584, orbits 448+448+1344+1344", r.checks.len()))
}

/// Conjugacy classes of GL₄(2) elements f with f and I + f invertible, by
/// orbit partition. Matrices are 16-bit masks, row r in bits 4r..4r+3.
fn gl42_oracle() -> usize {
    let mul = |a: u16, b: u16| -> u16 {
        let mut c = 0u16;
        for r in 0..4 {
            let row = (a >> (4 * r)) & 0xf;
            let mut out = 0u16;
            for k in 0..4 {
                if row >> k & 1 == 1 {
                    out ^= (b >> (4 * k)) & 0xf;
                }
            }
            c |= out << (4 * r);
        }
        c
    };
    const ID: u16 = 0b1000_0100_0010_0001;
    let rank = |a: u16| {
        let mut rows: Vec<u16> = (0..4).map(|r| (a >> (4 * r)) & 0xf).collect();
        let mut rank = 0;
        for bit in 0..4 {
            if let Some(i) = (rank..4).find(|&i| rows[i] >> bit & 1 == 1) {
                rows.swap(rank, i);
                let pivot = rows[rank];
                rows.iter_mut()
                    .enumerate()
                    .filter(|(j, r)| *j != rank && **r >> bit & 1 == 1)
                    .for_each(|(_, r)| *r ^= pivot);
                rank += 1;
            }
        }
        rank
    };
    let inverse = |a: u16| {
        let mut x = a;
        let mut prev = ID;
        while x != ID {
            prev = x;
            x = mul(x, a);
        }
        prev
    };
    let group: Vec<(u16, u16)> = (0..=u16::MAX).filter(|&a| rank(a) == 4).map(|a| (a, inverse(a))).collect();
    assert_eq!(group.len(), 20160);
    let units: HashSet<u16> = group.iter().map(|g| g.0).collect();
    let mut rest: HashSet<u16> = units.iter().copied().filter(|&f| units.contains(&(f ^ ID))).collect();
    let mut classes = 0;
    while let Some(&f) = rest.iter().next() {
        for &(g, gi) in &group {
            rest.remove(&mul(mul(g, f), gi));
        }
        classes += 1;
    }
    classes
}

/// Conjugacy classes of GL₂(ℤ₄) elements f with f and 1 − f invertible.
fn gl2z4_oracle() -> usize {
    type M = [u32; 4];
    let mul = |a: M, b: M| -> M {
        [
            (a[0] * b[0] + a[1] * b[2]) % 4,
            (a[0] * b[1] + a[1] * b[3]) % 4,
            (a[2] * b[0] + a[3] * b[2]) % 4,
            (a[2] * b[1] + a[3] * b[3]) % 4,
        ]
    };
    let unit = |a: M| (a[0] * a[3] + 4 * 4 - a[1] * a[2]) % 2 == 1;
    let all: Vec<M> = (0..256u32).map(|c| [c & 3, c >> 2 & 3, c >> 4 & 3, c >> 6 & 3]).collect();
    let group: Vec<(M, M)> = all
        .iter()
        .filter(|&&a| unit(a))
        .map(|&a| (a, *all.iter().find(|&&b| mul(a, b) == [1, 0, 0, 1]).unwrap()))
        .collect();
    assert_eq!(group.len(), 96);
    let one_minus = |a: M| [(5 - a[0]) % 4, (4 - a[1]) % 4, (4 - a[2]) % 4, (5 - a[3]) % 4];
    let mut rest: HashSet<M> = all.iter().copied().filter(|&a| unit(a) && unit(one_minus(a))).collect();
    let mut classes = 0;
    while let Some(&f) = rest.iter().next() {
        for &(g, gi) in &group {
            rest.remove(&mul(mul(g, f), gi));
        }
        classes += 1;
    }
    classes
}

fn criterion_7() -> Outcome {
    let (over_f2, over_z4) = (gl42_oracle(), gl2z4_oracle());
    let family = latin16_family();
    check(over_f2 + over_z4 == 9 && family.len() == 9, || {
        format!("oracle {over_f2} + {over_z4}, family {}", family.len())
    })?;
    check(family.iter().all(|q| q.size() == 16 && q.is_latin()), || "latin16 member not latin".into())?;
    check(pairwise_distinct(&family), || "latin16 members not pairwise distinct".into())?;
    for p in [3u32, 5, 7, 11, 13] {
        let f = latin_p_family(p).map_err(err)?;
        check(f.len() == p as usize - 2 && pairwise_distinct(&f), || format!("latin_p_family({p})"))?;
    }
    Ok(format!("latin16 = {over_f2} over Z2^4 + {over_z4} over Z4^2 = 9 classes; p − 2 classes of size p for p ≤ 13"))
}

fn criterion_8() -> Outcome {
    let start = Instant::now();
    let r = appendix_suite().map_err(err)?;
    let failed: Vec<&str> = r.checks.iter().filter(|c| !c.passed).map(|c| c.name.as_str()).collect();
    check(failed.is_empty(), || format!("failed: {failed:?}"))?;
    for n in [2, 3] {
        for p in [3, 5, 7] {
            let name = format!("involutions of GL_{n}({p}) are diagonalizable");
            check(r.checks.iter().any(|c| c.name == name), || format!("missing: {name}"))?;
        }
    }
    check(r.checks.iter().any(|c| c.name.contains("K50 has no centerless")), || "K50 check missing".into())?;
    within(start, Duration::from_secs(180), "appendix suite")?;
    Ok(format!("{} checks in {:.0?}", r.checks.len(), start.elapsed()))
}

fn criterion_9() -> Outcome {
    let start = Instant::now();
    let corpus = default_corpus().map_err(err)?;
    check(corpus.len() >= 30, || format!("corpus of {}", corpus.len()))?;
    let r = galois_suite(&corpus).map_err(err)?;
    let failed: Vec<String> =
        r.checks.iter().filter(|c| !c.passed).map(|c| format!("{}: {}", c.name, c.detail)).collect();
    check(failed.is_empty(), || format!("failed: {failed:?}"))?;
    within(start, Duration::from_secs(180), "galois suite")?;
    Ok(format!("{} quandles, {} checks in {:.0?}", corpus.len(), r.checks.len(), start.elapsed()))
}

/// Scope that cannot be reproduced exhaustively must be flagged as such.
fn criterion_10() -> Outcome {
    let r = table1(3, &Table1Options { tier: 3, tables_dir: None }).map_err(err)?;
    check(!r.coverage.exhaustive, || "report claims exhaustive coverage".into())?;
    check(r.coverage.non_chain_si_branch.starts_with("not searched"), || "non-chain branch not flagged".into())?;
    let case = r.coverage.chain_cases.iter().find(|c| c.n == 8).ok_or("no (3, 8) case")?;
    check(!case.exhaustive && case.method == "canonical+randomized", || format!("(3, 8) coverage {case:?}"))?;
    check(r.coverage.chain_cases.iter().filter(|c| c.n < 8).all(|c| c.exhaustive), || "n < 8 not exhaustive".into())?;
    Ok("non-chain branch flagged unsearched; (3, 8) canonical+randomized; n ≤ 6 exhaustive".into())
}

#[test]
fn acceptance_criteria() {
    let criteria: [(u32, fn() -> Outcome); 10] = [
        (1, criterion_1),
        (2, criterion_2),
        (3, criterion_3),
        (4, criterion_4),
        (5, criterion_5),
        (6, criterion_6),
        (7, criterion_7),
        (8, criterion_8),
        (9, criterion_9),
        (10, criterion_10),
    ];
    let mut failures = Vec::new();
    for (id, run) in criteria {
        match run() {
            Ok(detail) => println!("criterion {id}: PASS  {detail}"),
            Err(why) => {
                println!("criterion {id}: FAIL  {why}");
                failures.push(id);
            }
        }
    }
    assert!(failures.is_empty(), "failing criteria: {failures:?}");
}
