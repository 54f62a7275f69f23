//! Graph folding: identification of vertices at distance 2, colouring by
//! folding, and exact folding and chromatic numbers.
//!
//! A folding of a connected graph is anything reachable by repeatedly merging
//! two vertices at distance 2. Every complete folding induces a proper
//! colouring (each final vertex is a colour class), and the smallest complete
//! folding has exactly chromatic-number many vertices. The crate provides
//! both sides independently so they can be checked against each other.

mod bits;
pub mod canon;
pub mod chromatic;
pub mod cli;
pub mod colouring;
pub mod error;
pub mod families;
pub mod folding;
pub mod graph;
pub mod io;
pub mod search;

pub use canon::{canonical_key, CanonicalKey};
pub use chromatic::{
    chromatic_number, clique_number, dsatur, greedy_colouring, optimal_colouring_with_mono_pair,
    ChiResult,
};
pub use colouring::{find_mono_distance2_pair, odd_cycle_colouring, verify_proper, Colouring};
pub use error::{Error, Result};
pub use families::{enumerate_connected, generate, FamilySpec};
pub use folding::{
    extract_colouring, proof_guided_fold, run_policy, FoldStep, FoldingRun, MonoPairOracle,
    Policy,
};
pub use graph::{Classification, Multigraph, VertexId};
pub use search::{
    folding_number, hadwiger_number, max_complete_folding, verify_hadwiger_relation,
    verify_theorem, Certificate, MinorModel, SearchOptions, SearchResult, TheoremReport,
};
