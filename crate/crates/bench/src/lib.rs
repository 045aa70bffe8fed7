//! Benchmark instances shared by the criterion benches.

use dcut_core::generate::{gnm, two_cliques_bridged};
use dcut_core::Graph;

/// Clique sizes for the bridged-clique scaling series (n = 8, 10, 12, 14).
pub const BRIDGED_Q: [usize; 4] = [4, 5, 6, 7];

pub fn bridged(q: usize) -> Graph {
    two_cliques_bridged(q).unwrap()
}

/// A sparse connected random graph with `n` vertices and `2n` edges.
pub fn sparse_random(n: usize, seed: u64) -> Graph {
    let m = (2 * n).min(n * (n - 1) / 2);
    gnm(n, m, true, seed).unwrap()
}
