//! Table-1 assembly and its JSON report.

use std::collections::BTreeMap;
use std::path::PathBuf;
use std::time::Instant;

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::chain::{chain_search, CaseCoverage};
use super::families::{dd_assembly, sr_family};
use super::{ensure, PipelineError};
use crate::quandle::{serialize, QuandleTable};
use crate::quiso::{are_isomorphic, dedupe_with, fingerprint, Fingerprint};

/// Primes up to which pairwise non-isomorphism is settled for every pair.
pub const FULL_VERIFICATION_MAX_P: u32 = 7;

/// Random cross-bucket backtracking confirmations above that bound.
pub const SPOT_CHECKS: usize = 50;

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Counts {
    pub si: usize,
    pub dd: usize,
    pub sr_not_dd: usize,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct FamilyEntry {
    /// "si", "dd" or "sr_not_dd".
    pub family: String,
    pub fingerprint: Fingerprint,
    pub table_file: Option<String>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct Coverage {
    pub tier: u8,
    /// True only if every searched branch was exhaustive; the non-chain
    /// subdirectly irreducible branch never is.
    pub exhaustive: bool,
    pub chain_cases: Vec<CaseCoverage>,
    pub non_chain_si_branch: String,
    /// "full" or "fingerprint+spot-checks".
    pub pairwise_verification: String,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ClassificationReport {
    pub p: u32,
    pub counts: Counts,
    pub families: Vec<FamilyEntry>,
    pub coverage: Coverage,
    pub timings_ms: BTreeMap<String, u64>,
    /// (j, j′) with 𝔔(p, j)/ζ ≅ Q(p, j′).
    pub zeta_quotients: Vec<(u32, u32)>,
}

#[derive(Clone, Debug)]
pub struct Table1Options {
    pub tier: u8,
    pub tables_dir: Option<PathBuf>,
}

impl Default for Table1Options {
    fn default() -> Self {
        Table1Options { tier: 2, tables_dir: None }
    }
}

fn ms(t: Instant) -> u64 {
    t.elapsed().as_millis() as u64
}

/// Enumerates the latin quandles of size 16p family by family, verifies
/// every member and their pairwise non-isomorphism, and reports counts.
pub fn table1(p: u32, opts: &Table1Options) -> Result<ClassificationReport, PipelineError> {
    let mut timings = BTreeMap::new();
    let t = Instant::now();
    let chain = chain_search(p, opts.tier)?;
    timings.insert("chain_search".into(), ms(t));

    let t = Instant::now();
    let sr = sr_family(p)?;
    let zeta_quotients = if sr.is_empty() { Vec::new() } else { super::families::zeta_quotient_map(p)? };
    timings.insert("sr_family".into(), ms(t));

    let t = Instant::now();
    let dd = dd_assembly(p)?;
    timings.insert("dd_assembly".into(), ms(t));

    let t = Instant::now();
    let mut members: Vec<(&str, QuandleTable)> = Vec::new();
    members.extend(chain.quandles.iter().map(|q| ("si", q.clone())));
    members.extend(dd.iter().map(|q| ("dd", q.clone())));
    members.extend(sr.iter().map(|m| ("sr_not_dd", m.table.clone().expect("built member"))));
    let n = 16 * p as usize;
    for (fam, q) in &members {
        ensure(q.size() == n && q.is_latin(), || format!("{fam} member is not latin of size {n}"))?;
    }
    let tables: Vec<QuandleTable> = members.iter().map(|m| m.1.clone()).collect();
    let fps: Vec<Fingerprint> = tables.par_iter().map(fingerprint).collect::<Result<_, _>>()?;
    for ((fam, _), fp) in members.iter().zip(&fps) {
        let ok = match *fam {
            "si" => fp.shape == "chain-3",
            "dd" => fp.directly_decomposable,
            _ => !fp.directly_decomposable && fp.shape == "diamond",
        };
        ensure(ok, || format!("{fam} member has shape {} and DD flag {}", fp.shape, fp.directly_decomposable))?;
    }
    let reps = dedupe_with(&tables, &fps);
    ensure(reps.len() == tables.len(), || format!("{} members but {} isomorphism classes", tables.len(), reps.len()))?;
    let pairwise = if p <= FULL_VERIFICATION_MAX_P {
        "full".to_string()
    } else {
        spot_check(&tables, &fps)?;
        "fingerprint+spot-checks".to_string()
    };
    timings.insert("verification".into(), ms(t));

    let mut families = Vec::new();
    for (i, ((fam, q), fp)) in members.iter().zip(fps).enumerate() {
        let table_file = match &opts.tables_dir {
            Some(dir) => {
                std::fs::create_dir_all(dir)?;
                let path = dir.join(format!("p{p}_{fam}_{i:03}.tbl"));
                std::fs::write(&path, serialize(q))?;
                Some(path.display().to_string())
            }
            None => None,
        };
        families.push(FamilyEntry { family: fam.to_string(), fingerprint: fp, table_file });
    }
    let counts = Counts { si: chain.quandles.len(), dd: dd.len(), sr_not_dd: sr.len() };
    Ok(ClassificationReport {
        p,
        counts,
        families,
        coverage: Coverage {
            tier: opts.tier,
            exhaustive: false,
            chain_cases: chain.cases,
            non_chain_si_branch: "not searched; Q3 and Q5 verified to have 3-chain lattices".into(),
            pairwise_verification: pairwise,
        },
        timings_ms: timings,
        zeta_quotients,
    })
}

/// Backtracking on random pairs with distinct fingerprints must find no
/// isomorphism.
fn spot_check(tables: &[QuandleTable], fps: &[Fingerprint]) -> Result<(), PipelineError> {
    let mut pairs: Vec<(usize, usize)> =
        (0..tables.len()).flat_map(|i| (i + 1..tables.len()).map(move |j| (i, j))).collect();
    let mut rng = ChaCha8Rng::seed_from_u64(tables.len() as u64);
    pairs.shuffle(&mut rng);
    let sample: Vec<(usize, usize)> = pairs.into_iter().filter(|&(i, j)| fps[i] != fps[j]).take(SPOT_CHECKS).collect();
    let bad = sample.par_iter().find_any(|&&(i, j)| are_isomorphic(&tables[i], &tables[j]).is_some());
    ensure(bad.is_none(), || format!("fingerprints separate isomorphic quandles {bad:?}"))
}
