//! Top-level decision procedure.
//!
//! Disconnected graphs always have a d-cut of size zero. When `d >= k`,
//! every cut with at most `k` edges is a d-cut, so a global minimum cut
//! decides. Everything else goes through a decomposition and the table
//! dynamic program.

use std::time::{Duration, Instant};

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::decomposition::{
    construct_with, verify, ConstructOptions, DecompositionError, RootedDecomposition, VerificationReport,
};
use crate::dp::{Cost, DpError, DpOptions, DpRun, DpStats};
use crate::graph::{connected_components, edge_cut, global_min_cut, is_d_cut, Bipartition, Graph, GraphError};

#[derive(Clone, Debug, Default)]
pub struct SolveOptions {
    pub dp: DpOptions,
    /// Use this decomposition instead of constructing one. It is verified
    /// first.
    pub decomposition: Option<RootedDecomposition>,
    pub construct: ConstructOptions,
    /// Run the dynamic program even when `d >= k` (requires `k >= 2`).
    pub force_dp: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Method {
    /// Fewer than two vertices: no cut exists.
    TooSmall,
    Disconnected,
    MinCut,
    TableDp,
}

#[derive(Clone, Debug, Default)]
pub struct PhaseTimings {
    pub decomposition: Duration,
    pub dp: Duration,
    pub witness: Duration,
}

#[derive(Clone, Debug)]
pub struct SolveOutcome {
    pub answer: bool,
    /// A certified d-cut with at most `k` edges whenever the answer is yes.
    pub witness: Option<Bipartition>,
    pub cut_size: Option<usize>,
    pub method: Method,
    pub decomposition: Option<RootedDecomposition>,
    pub dp_stats: Option<DpStats>,
    /// `M[r, ∅, ∅, 1]` when the dynamic program ran.
    pub root_value: Option<Cost>,
    pub timings: PhaseTimings,
}

#[derive(Debug, Error)]
pub enum SolveError {
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error("decomposition failed: {0}")]
    Decomposition(#[from] DecompositionError),
    #[error("supplied decomposition fails verification: {0:?}")]
    InvalidDecomposition(Box<VerificationReport>),
    #[error(transparent)]
    Dp(#[from] DpError),
}

impl SolveOutcome {
    fn new(method: Method) -> SolveOutcome {
        SolveOutcome {
            answer: false,
            witness: None,
            cut_size: None,
            method,
            decomposition: None,
            dp_stats: None,
            root_value: None,
            timings: PhaseTimings::default(),
        }
    }

    fn with_witness(mut self, g: &Graph, witness: Bipartition, k: usize, d: usize) -> Result<Self, SolveError> {
        let size = edge_cut(g, &witness)?.len();
        if !is_d_cut(g, &witness, d)? || size > k {
            return Err(DpError::WitnessCertificationFailed(format!("{witness:?} has {size} edges")).into());
        }
        self.answer = true;
        self.cut_size = Some(size);
        self.witness = Some(witness);
        Ok(self)
    }
}

/// Decides whether `g` has a d-cut crossing at most `k` edges.
pub fn solve(g: &Graph, k: usize, d: usize, opts: &SolveOptions) -> Result<SolveOutcome, SolveError> {
    if d == 0 {
        return Err(SolveError::InvalidParameter("d must be at least 1".into()));
    }
    let n = g.vertex_count();
    if n < 2 {
        return Ok(SolveOutcome::new(Method::TooSmall));
    }
    let components = connected_components(g);
    if components.len() > 1 {
        let witness = Bipartition::from_side(n, components[0].iter().copied());
        return SolveOutcome::new(Method::Disconnected).with_witness(g, witness, k, d);
    }
    if d >= k && !opts.force_dp {
        let cut = global_min_cut(g)?.expect("connected graph with two or more vertices");
        let outcome = SolveOutcome::new(Method::MinCut);
        if cut.size > k {
            return Ok(outcome);
        }
        return outcome.with_witness(g, Bipartition::from_side(n, cut.source_side), k, d);
    }
    if k < 2 {
        return Err(SolveError::InvalidParameter("the dynamic program needs k >= 2".into()));
    }

    let mut timings = PhaseTimings::default();
    let started = Instant::now();
    let td = match &opts.decomposition {
        Some(td) => {
            let report = verify(g, td, k);
            if !report.passed() {
                return Err(SolveError::InvalidDecomposition(Box::new(report)));
            }
            td.clone()
        }
        None => construct_with(g, k, &opts.construct)?,
    };
    timings.decomposition = started.elapsed();

    let started = Instant::now();
    let run = DpRun::run(g, &td, k, d, &opts.dp)?;
    timings.dp = started.elapsed();

    let started = Instant::now();
    let witness = run.witness()?;
    timings.witness = started.elapsed();

    let mut outcome = SolveOutcome::new(Method::TableDp);
    if let Some(w) = witness {
        outcome = outcome.with_witness(g, w, k, d)?;
    }
    outcome.root_value = Some(run.root_value());
    outcome.dp_stats = Some(run.stats().clone());
    outcome.decomposition = Some(td);
    outcome.timings = timings;
    Ok(outcome)
}

/// Convenience wrapper returning only the answer.
pub fn decide(g: &Graph, k: usize, d: usize) -> Result<bool, SolveError> {
    Ok(solve(g, k, d, &SolveOptions::default())?.answer)
}
