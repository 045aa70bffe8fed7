//! Candidate small sides `A_s` of a bag.
//!
//! Enumeration lists every subset of the bag with `1..=k` elements other than
//! the whole bag. Colour coding instead takes, for every member of a covering
//! family, the connected components of the auxiliary graph `H` restricted to
//! that member. `H` joins all pairs inside `σ(t)`, all pairs inside each child
//! adhesion, and every bag edge, so a component never splits a child
//! adhesion or a bag edge unless the family member does.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use super::local::LocalNode;
use crate::family::{default_rounds, SetFamily};
use crate::graph::{Vertex, VertexSet};

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum MinBetaMode {
    /// Enumerate when the bag has at most [`ENUMERATE_BUDGET`] small subsets,
    /// colour coding otherwise.
    #[default]
    Auto,
    Enumerate,
    ColorCode,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum FamilyMode {
    /// All subsets of the bag (bags of at most 20 vertices).
    #[default]
    Exhaustive,
    /// Random family per node, seeded with `seed + node id`. Without an
    /// explicit round count, [`randomized_rounds`] decides.
    Randomized { seed: u64, rounds: Option<usize> },
}

pub const ENUMERATE_BUDGET: u64 = 1_000_000;

/// Upper limit on the default number of random rounds per node.
pub const ROUNDS_CAP: usize = 4096;

/// Default round count for a bag of `bag_size` vertices: the union-bound
/// count for separating `k` vertices from `k² + k` others, capped at
/// [`ROUNDS_CAP`].
pub fn randomized_rounds(bag_size: usize, k: usize) -> usize {
    default_rounds(bag_size, k, k * k + k).min(ROUNDS_CAP)
}

/// `Σ_{i<=k} C(n, i)`, saturating.
pub fn small_subset_count(n: usize, k: usize) -> u64 {
    let mut total: u64 = 0;
    let mut term: u64 = 1;
    for i in 0..=k.min(n) {
        total = total.saturating_add(term);
        term = term.saturating_mul((n - i) as u64) / (i as u64 + 1);
    }
    total
}

pub fn enumerated_sides(node: &LocalNode, k: usize) -> Vec<VertexSet> {
    node.bag.subsets_up_to(k).filter(|&a| !a.is_empty() && a != node.bag).collect()
}

/// Adjacency of the auxiliary graph `H` on the bag.
#[derive(Clone, Debug)]
pub struct AuxGraph {
    adjacency: Vec<VertexSet>,
}

impl AuxGraph {
    pub fn new(node: &LocalNode) -> AuxGraph {
        let mut adjacency = vec![VertexSet::empty(); VertexSet::CAPACITY];
        let mut clique = |set: VertexSet| {
            for v in set {
                adjacency[v] |= set - VertexSet::singleton(v);
            }
        };
        clique(node.adhesion);
        for &(_, sigma) in &node.children {
            clique(sigma);
        }
        for &(u, v) in &node.bag_edges {
            adjacency[u].insert(v);
            adjacency[v].insert(u);
        }
        AuxGraph { adjacency }
    }

    pub fn neighbors(&self, v: Vertex) -> VertexSet {
        self.adjacency[v]
    }

    /// Connected components of `H[within]`, ordered by smallest member.
    pub fn components(&self, within: VertexSet) -> Vec<VertexSet> {
        let mut rest = within;
        let mut out = Vec::new();
        while let Some(start) = rest.min() {
            let mut comp = VertexSet::singleton(start);
            let mut frontier = comp;
            while !frontier.is_empty() {
                let mut next = VertexSet::empty();
                for v in frontier {
                    next |= self.adjacency[v];
                }
                next = (next & rest) - comp;
                comp |= next;
                frontier = next;
            }
            rest = rest - comp;
            out.push(comp);
        }
        out
    }
}

/// Distinct components of `H[A_g]` over all family members that have
/// `1..=k` vertices and are not the whole bag, in increasing order.
pub fn colorcode_sides(node: &LocalNode, family: &SetFamily, k: usize) -> Vec<VertexSet> {
    let aux = AuxGraph::new(node);
    let mut found = BTreeSet::new();
    for &member in family.members() {
        for comp in aux.components(member & node.bag) {
            if comp.len() <= k && comp != node.bag {
                found.insert(comp);
            }
        }
    }
    found.into_iter().collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(vs: &[usize]) -> VertexSet {
        vs.iter().copied().collect()
    }

    fn node() -> LocalNode {
        LocalNode {
            node: 1,
            bag: set(&[0, 1, 2, 3, 4]),
            adhesion: set(&[0, 1]),
            cone: set(&[0, 1, 2, 3, 4, 5]),
            children: vec![(2, set(&[3, 4]))],
            bag_edges: vec![(1, 2), (2, 3)],
        }
    }

    #[test]
    fn subset_counts() {
        assert_eq!(small_subset_count(5, 2), 1 + 5 + 10);
        assert_eq!(small_subset_count(3, 7), 8);
        assert_eq!(small_subset_count(0, 2), 1);
        assert_eq!(enumerated_sides(&node(), 2).len(), 5 + 10);
        assert_eq!(enumerated_sides(&node(), 5).len(), 30);
    }

    #[test]
    fn aux_graph_rules() {
        let h = AuxGraph::new(&node());
        assert_eq!(h.neighbors(0), set(&[1]));
        assert_eq!(h.neighbors(3), set(&[2, 4]));
        assert_eq!(h.components(set(&[0, 2, 4])), vec![set(&[0]), set(&[2]), set(&[4])]);
        assert_eq!(h.components(node().bag), vec![node().bag]);
    }

    #[test]
    fn exhaustive_colorcode_sides_are_connected_small_sets() {
        let n = node();
        let sides = colorcode_sides(&n, &SetFamily::exhaustive(n.bag).unwrap(), 2);
        let h = AuxGraph::new(&n);
        let all = enumerated_sides(&n, 2);
        assert!(sides.iter().all(|s| all.contains(s)));
        assert!(sides.iter().all(|&s| h.components(s).len() == 1));
        // {0,2} is a valid small side but not H-connected
        assert!(!sides.contains(&set(&[0, 2])));
        assert!(sides.contains(&set(&[3, 4])));
    }

    #[test]
    fn empty_bag_has_no_sides() {
        let mut n = node();
        n.bag = set(&[0]);
        n.adhesion = set(&[0]);
        n.children.clear();
        n.bag_edges.clear();
        assert!(enumerated_sides(&n, 3).is_empty());
    }
}
