//! Independent reference procedures shared by the integration tests.
#![allow(dead_code)]

use std::collections::BTreeSet;

use dcut_core::decomposition::NodeId;
use dcut_core::dp::{BrokenSets, DpRun};
use dcut_core::graph::{Edge, Graph, VertexSet};
use dcut_core::VertexMultiset;

pub const CORPUS_SEED: u64 = 20_240_611;
pub const CORPUS_SIZE: usize = 500;

pub fn c4() -> Graph {
    Graph::new(4, [(0, 1), (1, 2), (2, 3), (0, 3)]).unwrap()
}

pub fn k4() -> Graph {
    Graph::new(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap()
}

pub fn p2() -> Graph {
    Graph::new(2, [(0, 1)]).unwrap()
}

/// Counts multiplicity vectors over `q` vertices with entries `<= d` and sum
/// `<= k` by reading every integer below `(d+1)^q` as a base-`(d+1)` number.
pub fn nested_loop_count(q: usize, d: usize, k: usize) -> usize {
    let base = d + 1;
    let mut count = 0;
    for code in 0..base.pow(q as u32) {
        let mut x = code;
        let mut sum = 0;
        for _ in 0..q {
            sum += x % base;
            x /= base;
        }
        if sum <= k {
            count += 1;
        }
    }
    count
}

pub type FamilyKey = (Vec<(NodeId, VertexMultiset)>, Vec<(Edge, VertexMultiset)>);

/// Families produced by selecting at most `2k` triples `(item, v, copy)` and
/// reading off multiplicities: copies `1..=d` of each vertex of a broken
/// child's adhesion, one copy of each endpoint of a broken edge. Selections
/// that fail any family condition are dropped; the rest are deduplicated.
pub fn triple_families(
    broken: &BrokenSets,
    child_adhesions: &[VertexSet],
    adhesion: VertexSet,
    p: &VertexMultiset,
    d: usize,
    k: usize,
) -> BTreeSet<FamilyKey> {
    // (slot, vertex); slots 0..children are children, then edges
    let mut triples: Vec<(usize, usize)> = Vec::new();
    for (slot, sigma) in child_adhesions.iter().enumerate() {
        for v in sigma.iter() {
            for _copy in 0..d {
                triples.push((slot, v));
            }
        }
    }
    let offset = child_adhesions.len();
    for (i, e) in broken.edges.iter().enumerate() {
        triples.push((offset + i, e.edge.0));
        triples.push((offset + i, e.edge.1));
    }
    let slots = offset + broken.edges.len();
    let mut out = BTreeSet::new();
    let mut chosen = Vec::new();
    select(&triples, 0, 2 * k, &mut chosen, &mut |sel: &[usize]| {
        let mut per_slot: Vec<Vec<usize>> = vec![Vec::new(); slots];
        for &i in sel {
            let (slot, v) = triples[i];
            per_slot[slot].push(v);
        }
        let members: Vec<VertexMultiset> =
            per_slot.iter().map(|vs| VertexMultiset::from_vertices(vs.iter().copied())).collect();
        // candidate-set conditions for each member
        for (slot, m) in members.iter().enumerate() {
            let (cap, limit) = if slot < offset { (d as u32, k as u32) } else { (1, k as u32) };
            if m.cardinality() > limit || m.entries().iter().any(|&(_, c)| c > cap) {
                return;
            }
        }
        let total = members.iter().fold(VertexMultiset::new(), |acc, m| acc.sum_union(m));
        if total.cardinality() > 2 * k as u32 {
            return;
        }
        for &(v, c) in total.entries() {
            if c > d as u32 || (adhesion.contains(v) && c > p.multiplicity(v)) {
                return;
            }
        }
        let children = broken.children.iter().zip(&members[..offset]).map(|(c, m)| (c.child, m.clone())).collect();
        let edges = broken.edges.iter().zip(&members[offset..]).map(|(e, m)| (e.edge, m.clone())).collect();
        out.insert((children, edges));
    });
    out
}

fn select(
    triples: &[(usize, usize)],
    from: usize,
    left: usize,
    chosen: &mut Vec<usize>,
    visit: &mut impl FnMut(&[usize]),
) {
    visit(chosen);
    if left == 0 {
        return;
    }
    for i in from..triples.len() {
        chosen.push(i);
        select(triples, i + 1, left - 1, chosen, visit);
        chosen.pop();
    }
}

/// Number of triples the procedure above would select from.
pub fn triple_universe(child_adhesions: &[VertexSet], edges: usize, d: usize) -> usize {
    child_adhesions.iter().map(|s| s.len() * d).sum::<usize>() + 2 * edges
}

pub fn choose_up_to(n: usize, r: usize) -> u128 {
    let mut total = 0u128;
    let mut term = 1u128;
    for i in 0..=r.min(n) {
        total += term;
        term = term * (n - i) as u128 / (i as u128 + 1);
    }
    total
}

/// Smallest number of edges of `G_t` crossed by a partition `(A, B)` of
/// `γ(t)` with `A ∩ β(t) = side`, crossing edges forming a d-matching and at
/// most `m_P(v)` crossing edges at each `v ∈ σ(t)`. Found by trying every
/// split of the vertices outside the bag.
pub fn brute_force_side(run: &DpRun<'_>, t: NodeId, side: VertexSet, p: &VertexMultiset) -> Option<usize> {
    let g = run.graph();
    let node = run.node(t);
    let adhesion = node.adhesion;
    let local: Vec<Edge> = g
        .edges()
        .iter()
        .copied()
        .filter(|&(u, v)| node.cone.contains(u) && node.cone.contains(v))
        .filter(|&(u, v)| !(adhesion.contains(u) && adhesion.contains(v)))
        .collect();
    let free = (node.cone - node.bag).to_vec();
    let mut best: Option<usize> = None;
    for mask in 0u64..(1u64 << free.len()) {
        let mut a = side;
        for (i, &v) in free.iter().enumerate() {
            if mask >> i & 1 == 1 {
                a.insert(v);
            }
        }
        let mut cross = [0u32; 64];
        let mut size = 0;
        for &(u, v) in &local {
            if a.contains(u) != a.contains(v) {
                cross[u] += 1;
                cross[v] += 1;
                size += 1;
            }
        }
        let ok = node
            .cone
            .iter()
            .all(|v| cross[v] <= run.d() as u32 && (!adhesion.contains(v) || cross[v] <= p.multiplicity(v)));
        if ok && best.is_none_or(|b| size < b) {
            best = Some(size);
        }
    }
    best
}
