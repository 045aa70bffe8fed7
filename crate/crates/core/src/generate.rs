//! Seeded instance generators.

use std::fmt;
use std::str::FromStr;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use thiserror::Error;

use crate::graph::{Edge, Graph};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GenerateError {
    #[error("invalid generator parameters: {0}")]
    InvalidParams(String),
    #[error("cannot parse generator spec `{0}` (expected gnm:N,M, gnm-free:N,M, grid:RxC or bridged:Q)")]
    BadSpec(String),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "model", rename_all = "snake_case")]
pub enum GeneratorSpec {
    /// `m` distinct edges on `n` vertices. When `connected`, a random spanning
    /// tree comes first and the remaining edges are drawn uniformly.
    Gnm {
        n: usize,
        m: usize,
        connected: bool,
    },
    Grid {
        rows: usize,
        cols: usize,
    },
    /// Two copies of `K_q` joined by a single edge.
    TwoCliquesBridged {
        q: usize,
    },
}

impl GeneratorSpec {
    pub fn generate(&self, seed: u64) -> Result<Graph, GenerateError> {
        match *self {
            GeneratorSpec::Gnm { n, m, connected } => gnm(n, m, connected, seed),
            GeneratorSpec::Grid { rows, cols } => Ok(grid(rows, cols)),
            GeneratorSpec::TwoCliquesBridged { q } => two_cliques_bridged(q),
        }
    }
}

impl fmt::Display for GeneratorSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            GeneratorSpec::Gnm { n, m, connected: true } => write!(f, "gnm:{n},{m}"),
            GeneratorSpec::Gnm { n, m, connected: false } => write!(f, "gnm-free:{n},{m}"),
            GeneratorSpec::Grid { rows, cols } => write!(f, "grid:{rows}x{cols}"),
            GeneratorSpec::TwoCliquesBridged { q } => write!(f, "bridged:{q}"),
        }
    }
}

impl FromStr for GeneratorSpec {
    type Err = GenerateError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || GenerateError::BadSpec(s.to_string());
        let (model, params) = s.split_once(':').ok_or_else(bad)?;
        let pair = |sep: char| -> Result<(usize, usize), GenerateError> {
            let (a, b) = params.split_once(sep).ok_or_else(bad)?;
            Ok((a.trim().parse().map_err(|_| bad())?, b.trim().parse().map_err(|_| bad())?))
        };
        match model {
            "gnm" | "gnm-free" => {
                let (n, m) = pair(',')?;
                Ok(GeneratorSpec::Gnm { n, m, connected: model == "gnm" })
            }
            "grid" => {
                let (rows, cols) = pair('x')?;
                Ok(GeneratorSpec::Grid { rows, cols })
            }
            "bridged" => Ok(GeneratorSpec::TwoCliquesBridged { q: params.trim().parse().map_err(|_| bad())? }),
            _ => Err(bad()),
        }
    }
}

pub fn gnm(n: usize, m: usize, connected: bool, seed: u64) -> Result<Graph, GenerateError> {
    let max = n * n.saturating_sub(1) / 2;
    if m > max {
        return Err(GenerateError::InvalidParams(format!("{m} edges do not fit on {n} vertices")));
    }
    if connected && n > 0 && m + 1 < n {
        return Err(GenerateError::InvalidParams(format!(
            "a connected graph on {n} vertices needs at least {} edges",
            n - 1
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut edges: Vec<Edge> = Vec::with_capacity(m);
    let mut present = vec![vec![false; n]; n];
    let mut add = |u: usize, v: usize, edges: &mut Vec<Edge>| {
        present[u][v] = true;
        present[v][u] = true;
        edges.push((u.min(v), u.max(v)));
    };
    if connected && n > 1 {
        let mut order: Vec<usize> = (0..n).collect();
        order.shuffle(&mut rng);
        for i in 1..n {
            let j = rng.gen_range(0..i);
            add(order[i], order[j], &mut edges);
        }
    }
    let mut rest: Vec<Edge> =
        (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).filter(|&(u, v)| !present[u][v]).collect();
    rest.shuffle(&mut rng);
    let missing = m - edges.len();
    edges.extend_from_slice(&rest[..missing]);
    Ok(Graph::new(n, edges).expect("generated edges are simple"))
}

pub fn grid(rows: usize, cols: usize) -> Graph {
    let id = |r: usize, c: usize| r * cols + c;
    let mut edges = Vec::new();
    for r in 0..rows {
        for c in 0..cols {
            if c + 1 < cols {
                edges.push((id(r, c), id(r, c + 1)));
            }
            if r + 1 < rows {
                edges.push((id(r, c), id(r + 1, c)));
            }
        }
    }
    Graph::new(rows * cols, edges).expect("grid edges are simple")
}

pub fn two_cliques_bridged(q: usize) -> Result<Graph, GenerateError> {
    if q == 0 {
        return Err(GenerateError::InvalidParams("clique size must be positive".into()));
    }
    let mut edges = Vec::new();
    for base in [0, q] {
        for u in 0..q {
            for v in u + 1..q {
                edges.push((base + u, base + v));
            }
        }
    }
    edges.push((q - 1, q));
    Ok(Graph::new(2 * q, edges).expect("clique edges are simple"))
}

/// Connected random graphs with `n` in `4..=12` and `m` in
/// `n - 1..=min(2n, n(n-1)/2)`, reproducible from `seed`.
pub fn random_corpus(count: usize, seed: u64) -> Vec<Graph> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let n = rng.gen_range(4..=12);
            let m = rng.gen_range(n - 1..=(2 * n).min(n * (n - 1) / 2));
            gnm(n, m, true, rng.gen()).expect("parameters are in range")
        })
        .collect()
}
