//! Exhaustive reference solver.
//!
//! Scans every non-trivial bipartition directly from the definition of a
//! d-cut. It shares nothing with the dynamic program beyond the graph type.

use serde::Serialize;
use thiserror::Error;

use crate::graph::{Bipartition, Graph};

pub const ORACLE_LIMIT: usize = 20;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum OracleError {
    #[error("oracle limited to {limit} vertices, graph has {n}")]
    TooLarge { n: usize, limit: usize },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct OracleResult {
    /// Fewest edges crossed by any d-cut, `None` if there is no d-cut.
    pub min_dcut_size: Option<usize>,
    /// The first optimal d-cut in scan order.
    pub best_cut: Option<Bipartition>,
    /// How many bipartitions attain the optimum.
    pub optimal_count: usize,
}

/// Minimum edge count over all d-cuts, by Gray-code enumeration of the
/// `2^(n-1) - 1` bipartitions that keep the last vertex on side B.
pub fn brute_force_min_dcut(g: &Graph, d: usize) -> Result<OracleResult, OracleError> {
    let n = g.vertex_count();
    if n > ORACLE_LIMIT {
        return Err(OracleError::TooLarge { n, limit: ORACLE_LIMIT });
    }
    let mut result = OracleResult { min_dcut_size: None, best_cut: None, optimal_count: 0 };
    if n < 2 {
        return Ok(result);
    }
    let mut on_a = vec![false; n];
    let mut cross = vec![0usize; n];
    let mut over = 0usize;
    let mut cut = 0usize;
    for step in 1u64..(1u64 << (n - 1)) {
        let v = step.trailing_zeros() as usize;
        for &u in g.neighbors(v) {
            let before = (cross[u] > d) as usize + (cross[v] > d) as usize;
            if on_a[u] == on_a[v] {
                cut += 1;
                cross[u] += 1;
                cross[v] += 1;
            } else {
                cut -= 1;
                cross[u] -= 1;
                cross[v] -= 1;
            }
            let after = (cross[u] > d) as usize + (cross[v] > d) as usize;
            over = over + after - before;
        }
        on_a[v] = !on_a[v];
        if over > 0 {
            continue;
        }
        match result.min_dcut_size {
            Some(best) if cut > best => {}
            Some(best) if cut == best => result.optimal_count += 1,
            _ => {
                result.min_dcut_size = Some(cut);
                result.optimal_count = 1;
                result.best_cut = Some(Bipartition::from_side(n, (0..n).filter(|&w| on_a[w])));
            }
        }
    }
    Ok(result)
}

/// Whether `g` has a d-cut crossing at most `k` edges.
pub fn oracle_decide(g: &Graph, k: usize, d: usize) -> Result<bool, OracleError> {
    Ok(brute_force_min_dcut(g, d)?.min_dcut_size.is_some_and(|m| m <= k))
}
