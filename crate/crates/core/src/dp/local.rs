use super::Cost;
use crate::decomposition::{NodeContext, NodeId, RootedDecomposition};
use crate::graph::{Edge, VertexSet};
use crate::multiset::VertexMultiset;

/// What the dynamic program needs to know about one decomposition node.
#[derive(Clone, Debug)]
pub struct LocalNode {
    pub node: NodeId,
    pub bag: VertexSet,
    pub adhesion: VertexSet,
    pub cone: VertexSet,
    /// Children with their adhesions `σ(c)`.
    pub children: Vec<(NodeId, VertexSet)>,
    /// `E(G_t[β(t)])`: bag edges not inside `σ(t)`.
    pub bag_edges: Vec<Edge>,
}

impl LocalNode {
    pub fn from_context(td: &RootedDecomposition, ctx: &NodeContext<'_>) -> LocalNode {
        let t = ctx.node;
        let bag = td.bag(t);
        LocalNode {
            node: t,
            bag,
            adhesion: ctx.adhesion,
            cone: ctx.cone,
            children: td.children(t).iter().map(|&c| (c, td.adhesion(c))).collect(),
            bag_edges: ctx
                .local_graph
                .edges()
                .iter()
                .copied()
                .filter(|&(u, v)| bag.contains(u) && bag.contains(v))
                .collect(),
        }
    }

    pub fn is_leaf(&self) -> bool {
        self.children.is_empty()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BrokenChild {
    pub child: NodeId,
    /// `S_c = A_s ∩ σ(c)`.
    pub side: VertexSet,
    /// `σ(c) \ A_s`.
    pub rest: VertexSet,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BrokenEdge {
    pub edge: Edge,
    /// The endpoint inside `A_s`, as a set.
    pub side: VertexSet,
}

/// Children whose adhesion, and bag edges whose endpoints, are split by `A_s`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct BrokenSets {
    pub children: Vec<BrokenChild>,
    pub edges: Vec<BrokenEdge>,
}

impl BrokenSets {
    pub fn len(&self) -> usize {
        self.children.len() + self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// Union of the parts of broken adhesions and broken edges outside `A_s`.
    pub fn forbidden(&self) -> VertexSet {
        let mut out = VertexSet::empty();
        for c in &self.children {
            out |= c.rest;
        }
        for e in &self.edges {
            out |= (VertexSet::singleton(e.edge.0) | VertexSet::singleton(e.edge.1)) - e.side;
        }
        out
    }
}

pub fn broken_sets(node: &LocalNode, side: VertexSet) -> BrokenSets {
    let children = node
        .children
        .iter()
        .filter_map(|&(child, sigma)| {
            let inside = sigma & side;
            let rest = sigma - side;
            (!inside.is_empty() && !rest.is_empty()).then_some(BrokenChild { child, side: inside, rest })
        })
        .collect();
    let edges = node
        .bag_edges
        .iter()
        .filter(|&&(u, v)| side.contains(u) != side.contains(v))
        .map(|&(u, v)| BrokenEdge {
            edge: (u, v),
            side: if side.contains(u) { VertexSet::singleton(u) } else { VertexSet::singleton(v) },
        })
        .collect();
    BrokenSets { children, edges }
}

/// `M_E[e, S', P']` for the bag edges of one node.
#[derive(Clone, Debug)]
pub struct EdgeTable {
    edges: Vec<Edge>,
    k: usize,
}

impl EdgeTable {
    pub fn assign(node: &LocalNode, k: usize) -> EdgeTable {
        EdgeTable { edges: node.bag_edges.clone(), k }
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    /// The 1-matched candidate sets of `V(e)`.
    pub fn candidates(e: Edge) -> [VertexMultiset; 4] {
        let (u, v) = e;
        [
            VertexMultiset::new(),
            VertexMultiset::from_vertices([u]),
            VertexMultiset::from_vertices([v]),
            VertexMultiset::from_vertices([u, v]),
        ]
    }

    /// Zero when `S'` keeps both endpoints together; one when it separates
    /// them and `P'` allows one crossing edge at each endpoint; ∞ otherwise.
    pub fn value(&self, e: Edge, side: VertexSet, p: &VertexMultiset) -> Cost {
        debug_assert!(self.edges.contains(&e));
        let (u, v) = e;
        if side.contains(u) == side.contains(v) {
            Cost::ZERO
        } else if p.multiplicity(u) >= 1 && p.multiplicity(v) >= 1 {
            Cost::capped(1, self.k)
        } else {
            Cost::INF
        }
    }
}
