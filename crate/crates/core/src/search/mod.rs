//! Exact folding searches, the Hadwiger number, and the checks that compare
//! them with the colouring side.

mod exact;
mod minor;

pub use exact::{
    folding_number, folding_number_with, max_complete_folding, max_complete_folding_with,
};
pub use minor::{hadwiger_number, MinorModel, HADWIGER_MAX_ORDER};

use crate::canon::canonical_key;
use crate::chromatic::chromatic_number;
use crate::colouring::Colouring;
use crate::error::Result;
use crate::folding::FoldingRun;
use crate::graph::Multigraph;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SearchOptions {
    /// Memoize states by canonical key.
    pub memoize: bool,
    /// Stop exploring a state once its value meets the bound (the clique
    /// number of the input for minimum search, order minus one for maximum).
    pub prune: bool,
}

impl Default for SearchOptions {
    fn default() -> Self {
        SearchOptions {
            memoize: true,
            prune: true,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Certificate {
    Folding(FoldingRun),
    Minor(MinorModel),
}

impl Certificate {
    pub fn as_folding(&self) -> Option<&FoldingRun> {
        match self {
            Certificate::Folding(run) => Some(run),
            Certificate::Minor(_) => None,
        }
    }

    pub fn as_minor(&self) -> Option<&MinorModel> {
        match self {
            Certificate::Minor(m) => Some(m),
            Certificate::Folding(_) => None,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SearchResult {
    pub value: usize,
    pub certificate: Certificate,
    pub states_visited: u64,
    pub memo_hits: u64,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TheoremCertificates {
    /// Complete folding of minimum order.
    pub folding: FoldingRun,
    /// Optimal colouring from the branch-and-bound.
    pub colouring: Colouring,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TheoremReport {
    pub graph_id: String,
    pub n: usize,
    pub m: usize,
    pub f: usize,
    pub chi: usize,
    pub equal: bool,
    pub certificates: Option<TheoremCertificates>,
}

/// Computes the folding number and the chromatic number independently and
/// compares them.
pub fn verify_theorem(g: &Multigraph) -> Result<TheoremReport> {
    let folding = folding_number(g)?;
    let chi = chromatic_number(g);
    let run = match folding.certificate {
        Certificate::Folding(run) => run,
        Certificate::Minor(_) => unreachable!("folding search returns a folding"),
    };
    Ok(TheoremReport {
        graph_id: canonical_key(g).to_hex(),
        n: g.order(),
        m: g.edge_count(),
        f: folding.value,
        chi: chi.chi,
        equal: folding.value == chi.chi,
        certificates: Some(TheoremCertificates {
            folding: run,
            colouring: chi.witness,
        }),
    })
}

/// Whether the folding number is at most the Hadwiger number.
pub fn verify_hadwiger_relation(g: &Multigraph) -> Result<bool> {
    Ok(folding_number(g)?.value <= hadwiger_number(g)?.value)
}
