//! Decision procedures for bounded-size d-cuts.
//!
//! A d-cut of a graph is a bipartition `(A, B)` with both sides non-empty in
//! which every vertex has at most `d` neighbours on the other side. Given `k`,
//! [`solve`] decides whether some d-cut crosses at most `k` edges and returns
//! a certified witness when one exists.

pub mod decomposition;
pub mod dp;
pub mod family;
pub mod generate;
pub mod graph;
pub mod io;
pub mod multiset;
pub mod oracle;
pub mod solve;

pub use decomposition::{construct, verify, RootedDecomposition};
pub use dp::{Cost, DpOptions, DpRun, FamilyMode, MinBetaMode};
pub use graph::{Bipartition, Graph, GraphError, Vertex, VertexSet};
pub use multiset::VertexMultiset;
pub use oracle::{brute_force_min_dcut, oracle_decide};
pub use solve::{decide, solve, Method, SolveError, SolveOptions, SolveOutcome};
