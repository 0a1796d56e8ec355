//! Classification of latin quandles of size 16p: the chain search, the
//! subdirectly reducible and decomposable families, Table-1 assembly and
//! the verification suites.

pub mod chain;
pub mod families;
pub mod report;
pub mod suites;

pub use chain::{
    chain_candidates, chain_search, module_classes, CaseCoverage, ChainCandidate, ChainSearchResult, CHAIN_PRIMES,
};
pub use families::{dd_assembly, decomposition_witness, lss4p_family, sr_family, zeta_quotient_map, SrMember};
pub use report::{table1, ClassificationReport, Counts, Coverage, FamilyEntry, Table1Options};
pub use suites::{
    appendix_suite, counting_suite, default_corpus, galois_suite, quandle_checks, CheckResult, CorpusEntry, SuiteReport,
};

use thiserror::Error;

use crate::conglat::ConglatError;
use crate::constructions::ConstructionError;
use crate::grpmodel::GroupError;
use crate::linfq::LinAlgError;
use crate::permgrp::PermError;
use crate::quandle::QuandleError;
use crate::quiso::QuisoError;

#[derive(Debug, Error)]
pub enum PipelineError {
    #[error("{0}")]
    Argument(String),
    /// A family member failed a structural check; the message is the
    /// certificate.
    #[error("check failed: {0}")]
    Check(String),
    #[error("io: {0}")]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Construction(#[from] ConstructionError),
    #[error(transparent)]
    Lattice(#[from] ConglatError),
    #[error(transparent)]
    Iso(#[from] QuisoError),
    #[error(transparent)]
    Group(#[from] GroupError),
    #[error(transparent)]
    LinAlg(#[from] LinAlgError),
    #[error(transparent)]
    Perm(#[from] PermError),
    #[error(transparent)]
    Quandle(#[from] QuandleError),
}

/// Fails with `msg` unless `cond` holds.
pub(crate) fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), PipelineError> {
    if cond {
        Ok(())
    } else {
        Err(PipelineError::Check(msg()))
    }
}
