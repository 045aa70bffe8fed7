//! Dynamic program over a compact decomposition with unbreakable bags.
//!
//! For every node `t`, side `S ⊆ σ(t)` (up to complement) and d-matched
//! candidate set `P` of `σ(t)`, the table holds `M[t, S, P, 1]`: the fewest
//! edges of `G_t` crossed by a non-trivial partition `(A, B)` of `G_t` with
//! `A ∩ σ(t) ∈ {S, σ(t) \ S}` whose crossing edges form a d-matching and give
//! every `v ∈ σ(t)` at most `m_P(v)` crossing edges (∞ if above `k`).
//! `M[t, S, P, 0]` is zero for the trivial partitions and ∞ otherwise.

mod cost;
mod families;
mod local;
mod run;
mod sides;
mod store;
mod witness;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::decomposition::{DecompositionError, NodeId};
use crate::family::FamilyError;
use crate::multiset::MultisetError;

pub use cost::Cost;
pub use families::{cs, enumerate_compatible_families, min_cost_family, CompatibleFamily, FamilyBounds};
pub use local::{broken_sets, BrokenChild, BrokenEdge, BrokenSets, EdgeTable, LocalNode};
pub use run::DpRun;
pub use sides::{
    colorcode_sides, enumerated_sides, randomized_rounds, small_subset_count, AuxGraph, FamilyMode, MinBetaMode,
    ENUMERATE_BUDGET, ROUNDS_CAP,
};
pub use store::{base_case, Choice, DpStore, NodeTable};

#[derive(Debug, Error, Clone, PartialEq)]
pub enum DpError {
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("child {child} has no entry for the requested key")]
    MissingChildEntry { child: NodeId },
    #[error("node {node} has {count} candidate sides, above the enumeration budget {budget}")]
    EnumerateBudget { node: NodeId, count: u64, budget: u64 },
    #[error(transparent)]
    Decomposition(#[from] DecompositionError),
    #[error(transparent)]
    Multiset(#[from] MultisetError),
    #[error(transparent)]
    Family(#[from] FamilyError),
    #[error("reconstructed witness failed certification: {0}")]
    WitnessCertificationFailed(String),
}

#[derive(Clone, Debug)]
pub struct DpOptions {
    pub min_beta: MinBetaMode,
    pub family: FamilyMode,
    pub enumerate_budget: u64,
}

impl Default for DpOptions {
    fn default() -> Self {
        DpOptions { min_beta: MinBetaMode::Auto, family: FamilyMode::Exhaustive, enumerate_budget: ENUMERATE_BUDGET }
    }
}

/// Counters collected while filling the tables.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct DpStats {
    pub nodes: usize,
    pub max_bag: usize,
    pub max_adhesion: usize,
    pub table_entries: usize,
    pub enumerate_nodes: usize,
    pub colorcode_nodes: usize,
    pub family_members: usize,
    /// Candidate sides `A_s` examined over all nodes.
    pub candidate_sides: usize,
    pub families_evaluated: u64,
    /// Sides discarded because more than `k` children and edges were broken.
    pub pruned_sides: u64,
    /// Families whose cost fell below their number of broken items. Always
    /// zero unless something is wrong.
    pub bound_violations: u64,
}
