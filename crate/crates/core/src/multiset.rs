//! Vertex multisets and d-matched candidate sets.
//!
//! A candidate set caps how many neighbors each adhesion vertex may have on
//! the other side of a partition. The canonical encoding (entries sorted by
//! vertex, zero multiplicities dropped) makes multisets usable directly as
//! table keys.

use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::Vertex;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum MultisetError {
    #[error("candidate domain has {size} vertices but the cut budget is {k}")]
    DomainTooLarge { size: usize, k: usize },
    #[error("multiplicity cap d must be at least 1")]
    ZeroCap,
}

/// Multiset over vertices, stored as `(vertex, multiplicity)` pairs sorted by
/// vertex with strictly positive multiplicities.
#[derive(Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct VertexMultiset {
    entries: Vec<(Vertex, u32)>,
    cardinality: u32,
}

impl VertexMultiset {
    pub fn new() -> Self {
        Self::default()
    }

    /// Builds a multiset from `(vertex, count)` pairs in any order.
    /// Repeated vertices accumulate; zero counts are ignored.
    pub fn from_counts<I: IntoIterator<Item = (Vertex, u32)>>(counts: I) -> Self {
        let mut entries: Vec<(Vertex, u32)> = counts.into_iter().filter(|&(_, c)| c > 0).collect();
        entries.sort_unstable_by_key(|&(v, _)| v);
        let mut merged: Vec<(Vertex, u32)> = Vec::with_capacity(entries.len());
        for (v, c) in entries {
            match merged.last_mut() {
                Some((last, acc)) if *last == v => *acc += c,
                _ => merged.push((v, c)),
            }
        }
        let cardinality = merged.iter().map(|&(_, c)| c).sum();
        VertexMultiset { entries: merged, cardinality }
    }

    /// One copy of each listed vertex.
    pub fn from_vertices<I: IntoIterator<Item = Vertex>>(vertices: I) -> Self {
        Self::from_counts(vertices.into_iter().map(|v| (v, 1)))
    }

    pub fn multiplicity(&self, v: Vertex) -> u32 {
        self.entries.binary_search_by_key(&v, |&(w, _)| w).map_or(0, |i| self.entries[i].1)
    }

    pub fn cardinality(&self) -> u32 {
        self.cardinality
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn entries(&self) -> &[(Vertex, u32)] {
        &self.entries
    }

    pub fn support(&self) -> impl Iterator<Item = Vertex> + '_ {
        self.entries.iter().map(|&(v, _)| v)
    }

    /// Pointwise `m_self(v) <= m_other(v)`.
    pub fn is_included_in(&self, other: &VertexMultiset) -> bool {
        self.entries.iter().all(|&(v, c)| c <= other.multiplicity(v))
    }

    /// Pointwise sum of multiplicities.
    pub fn sum_union(&self, other: &VertexMultiset) -> VertexMultiset {
        Self::from_counts(self.entries.iter().chain(other.entries.iter()).copied())
    }
}

impl fmt::Debug for VertexMultiset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_map().entries(self.entries.iter().map(|(v, c)| (v, c))).finish()
    }
}

/// All d-matched candidate sets of `domain`: multisets supported on `domain`
/// with every multiplicity at most `d` and total size at most `k`.
///
/// The result is duplicate-free and sorted by canonical encoding. An empty
/// domain yields exactly `[∅]`.
pub fn enumerate_d_matched(domain: &[Vertex], d: usize, k: usize) -> Result<Vec<VertexMultiset>, MultisetError> {
    if d == 0 {
        return Err(MultisetError::ZeroCap);
    }
    let mut sorted = domain.to_vec();
    sorted.sort_unstable();
    sorted.dedup();
    if sorted.len() > k {
        return Err(MultisetError::DomainTooLarge { size: sorted.len(), k });
    }
    let mut out = Vec::new();
    let mut counts = vec![0u32; sorted.len()];
    fill_counts(&sorted, d as u32, k as u32, 0, &mut counts, &mut out);
    out.sort_unstable();
    Ok(out)
}

fn fill_counts(domain: &[Vertex], d: u32, budget: u32, at: usize, counts: &mut [u32], out: &mut Vec<VertexMultiset>) {
    if at == domain.len() {
        out.push(VertexMultiset::from_counts(domain.iter().copied().zip(counts.iter().copied())));
        return;
    }
    for c in 0..=d.min(budget) {
        counts[at] = c;
        fill_counts(domain, d, budget - c, at + 1, counts, out);
    }
    counts[at] = 0;
}
