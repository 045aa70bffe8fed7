use std::collections::HashMap;

use super::Cost;
use crate::decomposition::NodeId;
use crate::graph::{Vertex, VertexSet};
use crate::multiset::{enumerate_d_matched, MultisetError, VertexMultiset};

/// How an `n_e = 1` entry attained its value.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Choice {
    /// The entry is ∞.
    Unreachable,
    /// Taken from a child entry `M[child, ∅, P_c, 1]`.
    Child { child: NodeId, candidate: usize },
    /// Taken from the bag side `A_s` of minimum cost.
    Bag { side: VertexSet },
}

/// Entries `M[t, S, P, n_e]` of one node.
///
/// `S` is stored under a canonical representative of `{S, σ(t) \ S}`: the
/// one not containing the largest adhesion vertex. Numbering adhesion
/// vertices by position, the side index is that representative's bitmask, so
/// index 0 stands for `S ∈ {∅, σ(t)}`.
#[derive(Clone, Debug)]
pub struct NodeTable {
    adhesion: Vec<Vertex>,
    candidates: Vec<VertexMultiset>,
    index: HashMap<VertexMultiset, usize>,
    values: Vec<Cost>,
    choices: Vec<Choice>,
}

impl NodeTable {
    pub(crate) fn new(adhesion: VertexSet, d: usize, k: usize) -> Result<NodeTable, MultisetError> {
        let adhesion = adhesion.to_vec();
        let candidates = enumerate_d_matched(&adhesion, d, k)?;
        let index = candidates.iter().cloned().enumerate().map(|(i, p)| (p, i)).collect();
        let size = side_count(adhesion.len()) * candidates.len();
        Ok(NodeTable {
            adhesion,
            candidates,
            index,
            values: vec![Cost::INF; size],
            choices: vec![Choice::Unreachable; size],
        })
    }

    pub fn adhesion(&self) -> &[Vertex] {
        &self.adhesion
    }

    pub fn adhesion_set(&self) -> VertexSet {
        self.adhesion.iter().copied().collect()
    }

    /// Number of canonical sides, `max(1, 2^(|σ|-1))`.
    pub fn side_count(&self) -> usize {
        side_count(self.adhesion.len())
    }

    pub fn candidates(&self) -> &[VertexMultiset] {
        &self.candidates
    }

    pub fn candidate_index(&self, p: &VertexMultiset) -> Option<usize> {
        self.index.get(p).copied()
    }

    /// Canonical index of `S` (only its intersection with `σ(t)` matters).
    pub fn side_index(&self, s: VertexSet) -> usize {
        let mut mask = 0usize;
        for (i, &v) in self.adhesion.iter().enumerate() {
            if s.contains(v) {
                mask |= 1 << i;
            }
        }
        match self.adhesion.len() {
            0 => 0,
            len if mask >> (len - 1) & 1 == 1 => !mask & ((1 << len) - 1),
            _ => mask,
        }
    }

    /// The canonical representative for a side index.
    pub fn side_set(&self, s_idx: usize) -> VertexSet {
        self.adhesion.iter().enumerate().filter(|&(i, _)| s_idx >> i & 1 == 1).map(|(_, &v)| v).collect()
    }

    fn slot(&self, s_idx: usize, p_idx: usize) -> usize {
        debug_assert!(s_idx < self.side_count() && p_idx < self.candidates.len());
        s_idx * self.candidates.len() + p_idx
    }

    /// `M[t, S, P, 1]`.
    pub fn value(&self, s_idx: usize, p_idx: usize) -> Cost {
        self.values[self.slot(s_idx, p_idx)]
    }

    /// `M[t, S, P, n_e]` for `n_e ∈ {0, 1}`.
    pub fn entry(&self, s_idx: usize, p_idx: usize, n_e: u8) -> Cost {
        if n_e == 0 {
            base_case(s_idx)
        } else {
            self.value(s_idx, p_idx)
        }
    }

    pub fn choice(&self, s_idx: usize, p_idx: usize) -> Choice {
        self.choices[self.slot(s_idx, p_idx)]
    }

    pub(crate) fn set(&mut self, s_idx: usize, p_idx: usize, value: Cost, choice: Choice) {
        let slot = self.slot(s_idx, p_idx);
        self.values[slot] = value;
        self.choices[slot] = if value.is_inf() { Choice::Unreachable } else { choice };
    }

    /// Stored entries counting both `n_e` layers.
    pub fn entry_count(&self) -> usize {
        2 * self.values.len()
    }
}

fn side_count(adhesion_len: usize) -> usize {
    1 << adhesion_len.saturating_sub(1)
}

/// `M[t, S, P, 0]`: zero when one side of `σ(t)` is empty, otherwise ∞.
pub fn base_case(s_idx: usize) -> Cost {
    if s_idx == 0 {
        Cost::ZERO
    } else {
        Cost::INF
    }
}

/// All node tables of one run, indexed by node id.
#[derive(Clone, Debug, Default)]
pub struct DpStore {
    pub(crate) tables: Vec<NodeTable>,
}

impl DpStore {
    pub fn table(&self, t: NodeId) -> &NodeTable {
        &self.tables[t]
    }

    pub fn tables(&self) -> &[NodeTable] {
        &self.tables
    }

    /// Looks up `M[t, S, P, n_e]` by explicit side and candidate set. `S` and
    /// `σ(t) \ S` resolve to the same entry.
    pub fn lookup(&self, t: NodeId, s: VertexSet, p: &VertexMultiset, n_e: u8) -> Option<Cost> {
        let table = &self.tables[t];
        let p_idx = table.candidate_index(p)?;
        Some(table.entry(table.side_index(s), p_idx, n_e))
    }

    pub fn entry_count(&self) -> usize {
        self.tables.iter().map(NodeTable::entry_count).sum()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(vs: &[Vertex]) -> VertexSet {
        vs.iter().copied().collect()
    }

    #[test]
    fn side_index_is_complement_invariant() {
        let table = NodeTable::new(set(&[2, 5, 7]), 1, 3).unwrap();
        assert_eq!(table.side_count(), 4);
        for s in set(&[2, 5, 7]).subsets_up_to(3) {
            let c = set(&[2, 5, 7]) - s;
            assert_eq!(table.side_index(s), table.side_index(c));
            let rep = table.side_set(table.side_index(s));
            assert!(rep == s || rep == c);
            assert!(!rep.contains(7));
        }
        assert_eq!(table.side_index(VertexSet::empty()), 0);
        assert_eq!(table.side_index(set(&[2, 5, 7])), 0);
        assert_ne!(table.side_index(set(&[5])), 0);
    }

    #[test]
    fn root_table_has_one_entry_per_layer() {
        let table = NodeTable::new(VertexSet::empty(), 2, 4).unwrap();
        assert_eq!(table.side_count(), 1);
        assert_eq!(table.candidates(), &[VertexMultiset::new()]);
        assert_eq!(table.entry_count(), 2);
        assert_eq!(table.entry(0, 0, 0), Cost::ZERO);
        assert!(table.entry(0, 0, 1).is_inf());
    }

    #[test]
    fn base_cases() {
        assert_eq!(base_case(0), Cost::ZERO);
        assert!(base_case(1).is_inf());
    }
}
