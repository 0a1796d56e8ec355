use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use latinq::conglat::{all_congruences, is_solvable};
use latinq::constructions::g3g5::{build_presented_quandle, realize, G3, G5};
use latinq::constructions::{build_q4, build_qpj, build_sr, latin16_family, GkParams, Twist};
use latinq::pipeline::{
    appendix_suite, chain_search, counting_suite, default_corpus, galois_suite, table1, SuiteReport, Table1Options,
    CHAIN_PRIMES,
};
use latinq::quandle::{deserialize, serialize, QuandleTable};
use latinq::quiso::are_isomorphic;

#[derive(Parser)]
#[command(name = "latinq", version, about = "Latin quandles of size 16p: constructions, searches and checks")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Enumerate the latin quandles of size 16p and print the counts.
    Classify {
        #[arg(long)]
        p: u32,
        #[arg(long, default_value_t = 2, value_parser = clap::value_parser!(u8).range(1..=3))]
        tier: u8,
        /// Write the JSON report here.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Write one table file per quandle into this directory.
        #[arg(long = "tables-dir")]
        tables_dir: Option<PathBuf>,
    },
    /// Search for latin quandles with a 3-element congruence chain.
    ChainSearch {
        /// A prime, or "all" for every prime with an admissible dimension.
        #[arg(long)]
        p: String,
        #[arg(long, value_parser = clap::value_parser!(u8).range(1..=3))]
        tier: u8,
    },
    /// Build one quandle of a named family and write its table.
    Construct {
        #[arg(long, value_enum)]
        family: Family,
        #[arg(long)]
        p: Option<u32>,
        /// Family member; 1 or 2 for sr and lss4p, 1 to 9 for latin16.
        #[arg(long, default_value_t = 1)]
        j: u32,
        #[arg(long)]
        out: PathBuf,
    },
    /// Check properties of a quandle table.
    Verify {
        #[arg(long)]
        file: PathBuf,
        /// Comma-separated: latin, connected, faithful, solvable, si, dd.
        #[arg(long, value_delimiter = ',', default_value = "latin,connected,faithful,solvable,si,dd")]
        props: Vec<Prop>,
    },
    /// Compute the congruence lattice and write it in DOT format.
    Lattice {
        #[arg(long)]
        file: PathBuf,
        #[arg(long)]
        dot: PathBuf,
    },
    /// Test two quandle tables for isomorphism.
    Iso {
        #[arg(long)]
        a: PathBuf,
        #[arg(long)]
        b: PathBuf,
    },
    /// Run a verification suite.
    Suite {
        #[arg(long, value_enum)]
        name: SuiteName,
        /// Prime for the counting suite.
        #[arg(long, default_value_t = 7)]
        p: u32,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Family {
    Sr,
    Lss4p,
    Latin16,
    Q4,
    G3,
    G5,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Prop {
    Latin,
    Connected,
    Faithful,
    Solvable,
    Si,
    Dd,
}

#[derive(Clone, Copy, ValueEnum)]
enum SuiteName {
    Galois,
    Appendix,
    Counting,
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::FAILURE,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::FAILURE
        }
    }
}

/// Ok(false) when a check fails.
fn run(cli: Cli) -> Result<bool> {
    match cli.command {
        Command::Classify { p, tier, out, tables_dir } => {
            let report = table1(p, &Table1Options { tier, tables_dir })?;
            let c = &report.counts;
            println!("p = {p}: SI {}, DD {}, SR-not-DD {}", c.si, c.dd, c.sr_not_dd);
            for (j, jj) in &report.zeta_quotients {
                println!("SR({p},{j})/zeta = Q({p},{jj})");
            }
            println!("pairwise verification: {}", report.coverage.pairwise_verification);
            if let Some(path) = out {
                std::fs::write(&path, serde_json::to_string_pretty(&report)?)
                    .with_context(|| format!("writing {}", path.display()))?;
            }
            Ok(true)
        }
        Command::ChainSearch { p, tier } => {
            let primes: Vec<u32> = if p == "all" {
                CHAIN_PRIMES.to_vec()
            } else {
                vec![p.parse().with_context(|| format!("not a prime: {p}"))?]
            };
            for p in primes {
                let r = chain_search(p, tier)?;
                let sizes: Vec<usize> = r.quandles.iter().map(|q| q.size()).collect();
                println!("p = {p}: {} quandle(s) {sizes:?}", r.quandles.len());
                for c in &r.cases {
                    println!(
                        "  n = {}: {} module class(es), {}, {} automorphisms, {} quandles built, {} survivor(s)",
                        c.n, c.module_classes, c.method, c.automorphisms_examined, c.quandles_built, c.survivors
                    );
                }
            }
            Ok(true)
        }
        Command::Construct { family, p, j, out } => {
            let q = construct(family, p, j)?;
            std::fs::write(&out, serialize(&q)).with_context(|| format!("writing {}", out.display()))?;
            println!("wrote quandle of size {} to {}", q.size(), out.display());
            Ok(true)
        }
        Command::Verify { file, props } => {
            let q = read_table(&file)?;
            let lattice =
                if props.iter().any(|p| matches!(p, Prop::Si | Prop::Dd)) { Some(all_congruences(&q)?) } else { None };
            let mut all = true;
            for prop in props {
                let holds = match prop {
                    Prop::Latin => q.is_latin(),
                    Prop::Connected => q.is_connected(),
                    Prop::Faithful => q.is_faithful(),
                    Prop::Solvable => is_solvable(&q),
                    Prop::Si => lattice.as_ref().is_some_and(|l| l.is_subdirectly_irreducible()),
                    Prop::Dd => lattice.as_ref().is_some_and(|l| l.is_directly_decomposable()),
                };
                println!("{}: {holds}", format!("{prop:?}").to_lowercase());
                all &= holds;
            }
            Ok(all)
        }
        Command::Lattice { file, dot } => {
            let q = read_table(&file)?;
            let lattice = all_congruences(&q)?;
            std::fs::write(&dot, lattice.to_dot()).with_context(|| format!("writing {}", dot.display()))?;
            println!("{} congruences, shape {}", lattice.len(), lattice.shape().tag());
            Ok(true)
        }
        Command::Iso { a, b } => {
            let (qa, qb) = (read_table(&a)?, read_table(&b)?);
            match are_isomorphic(&qa, &qb) {
                Some(phi) => {
                    let images: Vec<String> = phi.iter().map(|x| x.to_string()).collect();
                    println!("isomorphic: {}", images.join(" "));
                    Ok(true)
                }
                None => {
                    println!("not isomorphic");
                    Ok(false)
                }
            }
        }
        Command::Suite { name, p } => {
            let report = match name {
                SuiteName::Galois => galois_suite(&default_corpus()?)?,
                SuiteName::Appendix => appendix_suite()?,
                SuiteName::Counting => counting_suite(p)?,
            };
            print_suite(&report);
            Ok(report.passed())
        }
    }
}

fn construct(family: Family, p: Option<u32>, j: u32) -> Result<QuandleTable> {
    let need_p = || p.context("--p is required for this family");
    let need_j12 = || if j == 1 || j == 2 { Ok(j) } else { bail!("--j must be 1 or 2, got {j}") };
    let presented = |pair, expected: u32| -> Result<QuandleTable> {
        if let Some(p) = p.filter(|&p| p != expected) {
            bail!("this family has p = {expected}, got {p}");
        }
        Ok(build_presented_quandle(&realize(pair)?)?.coset.table)
    };
    Ok(match family {
        Family::Sr => build_sr(GkParams::new(need_p()?)?, need_j12()?, Twist::E1)?.coset.table,
        Family::Lss4p => build_qpj(GkParams::new(need_p()?)?, need_j12()?)?.coset.table,
        Family::Latin16 => {
            let all = latin16_family();
            let i = (j as usize).checked_sub(1).filter(|&i| i < all.len());
            let i = i.with_context(|| format!("--j must be between 1 and {}, got {j}", all.len()))?;
            all[i].clone()
        }
        Family::Q4 => build_q4(),
        Family::G3 => presented(&G3, 3)?,
        Family::G5 => presented(&G5, 5)?,
    })
}

fn read_table(path: &Path) -> Result<QuandleTable> {
    let text = std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    deserialize(&text).with_context(|| format!("parsing {}", path.display()))
}

fn print_suite(report: &SuiteReport) {
    for c in &report.checks {
        let mark = if c.passed { "pass" } else { "FAIL" };
        if c.detail.is_empty() {
            println!("{mark}  {}", c.name);
        } else {
            println!("{mark}  {}: {}", c.name, c.detail);
        }
    }
    let failed = report.checks.iter().filter(|c| !c.passed).count();
    println!("{} suite: {} checks, {failed} failed, {} ms", report.name, report.checks.len(), report.timing_ms);
}
