//! Rooted compact tree decompositions with bounded adhesion and
//! edge-unbreakable bags.
//!
//! The dynamic program relies on four properties of a decomposition: the
//! tree-decomposition axioms, compactness of every non-root node, adhesions of
//! size at most `k`, and `(k, k)`-edge-unbreakable bags. [`verify`] checks all
//! four exhaustively and [`construct`] builds a decomposition that passes them.

mod construct;
mod cuts;
mod format;
mod verify;

use serde::Serialize;
use thiserror::Error;

use crate::graph::{Graph, SubgraphView, Vertex, VertexSet};

pub use construct::{construct, construct_with, ConstructOptions};
pub use cuts::for_each_small_cut;
pub use format::{parse, serialize};
pub use verify::{verify, verify_with, CheckOutcome, Counterexample, VerificationReport, VerifyOptions};

pub type NodeId = usize;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum DecompositionError {
    #[error("graph has {n} vertices; decompositions support at most {limit}")]
    TooManyVertices { n: usize, limit: usize },
    #[error("malformed tree: {0}")]
    MalformedTree(String),
    #[error("node {node} references vertex {vertex} outside the graph")]
    BagVertexOutOfRange { node: NodeId, vertex: Vertex },
    #[error("decomposition is for {found} vertices, graph has {expected}")]
    VertexCountMismatch { expected: usize, found: usize },
    #[error("tree-decomposition axiom violated: {0:?}")]
    Axiom(Counterexample),
    #[error("graph has {n} vertices, above the exhaustive limit {limit}")]
    SizeLimitExceeded { n: usize, limit: usize },
    #[error("decomposition search exceeded its budget of {0} candidate bags")]
    SearchBudgetExceeded(u64),
    #[error("graph is disconnected")]
    Disconnected,
    #[error("no decomposition found (exhaustive search failed)")]
    NotFound,
    #[error("constructed decomposition failed its own verification: {0:?}")]
    SelfCheckFailed(Box<VerificationReport>),
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
}

/// A rooted tree with a bag per node.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RootedDecomposition {
    vertex_count: usize,
    parent: Vec<Option<NodeId>>,
    bags: Vec<VertexSet>,
    root: NodeId,
    #[serde(skip)]
    children: Vec<Vec<NodeId>>,
}

impl RootedDecomposition {
    /// Validates that `parent` describes a single rooted tree and that every
    /// bag vertex is below `vertex_count`.
    pub fn new(
        vertex_count: usize,
        parent: Vec<Option<NodeId>>,
        bags: Vec<VertexSet>,
    ) -> Result<Self, DecompositionError> {
        if vertex_count > VertexSet::CAPACITY {
            return Err(DecompositionError::TooManyVertices { n: vertex_count, limit: VertexSet::CAPACITY });
        }
        let nodes = parent.len();
        if nodes == 0 || bags.len() != nodes {
            return Err(DecompositionError::MalformedTree(format!("{} parent entries for {} bags", nodes, bags.len())));
        }
        let roots: Vec<NodeId> = (0..nodes).filter(|&t| parent[t].is_none()).collect();
        if roots.len() != 1 {
            return Err(DecompositionError::MalformedTree(format!("expected exactly one root, found {}", roots.len())));
        }
        let mut children = vec![Vec::new(); nodes];
        for (t, p) in parent.iter().enumerate() {
            if let Some(p) = *p {
                if p >= nodes || p == t {
                    return Err(DecompositionError::MalformedTree(format!("node {t} has invalid parent {p}")));
                }
                children[p].push(t);
            }
        }
        let td = RootedDecomposition { vertex_count, parent, bags, root: roots[0], children };
        if td.post_order().len() != nodes {
            return Err(DecompositionError::MalformedTree("parent links contain a cycle".into()));
        }
        let limit = VertexSet::full(vertex_count);
        for (t, bag) in td.bags.iter().enumerate() {
            if let Some(v) = (*bag - limit).min() {
                return Err(DecompositionError::BagVertexOutOfRange { node: t, vertex: v });
            }
        }
        Ok(td)
    }

    /// The trivial decomposition: one node whose bag is the whole vertex set.
    pub fn single_bag(g: &Graph) -> Result<Self, DecompositionError> {
        check_size(g)?;
        Self::new(g.vertex_count(), vec![None], vec![g.all_vertices()])
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn node_count(&self) -> usize {
        self.parent.len()
    }

    pub fn root(&self) -> NodeId {
        self.root
    }

    pub fn parent(&self, t: NodeId) -> Option<NodeId> {
        self.parent[t]
    }

    pub fn children(&self, t: NodeId) -> &[NodeId] {
        &self.children[t]
    }

    pub fn bag(&self, t: NodeId) -> VertexSet {
        self.bags[t]
    }

    pub fn bags(&self) -> &[VertexSet] {
        &self.bags
    }

    pub fn max_bag_size(&self) -> usize {
        self.bags.iter().map(|b| b.len()).max().unwrap_or(0)
    }

    /// `σ(t) = β(t) ∩ β(parent(t))`, empty at the root.
    pub fn adhesion(&self, t: NodeId) -> VertexSet {
        match self.parent[t] {
            Some(p) => self.bags[t] & self.bags[p],
            None => VertexSet::empty(),
        }
    }

    pub fn max_adhesion(&self) -> usize {
        (0..self.node_count()).map(|t| self.adhesion(t).len()).max().unwrap_or(0)
    }

    /// Nodes with every child listed before its parent; children are visited
    /// in increasing id order.
    pub fn post_order(&self) -> Vec<NodeId> {
        let mut out = Vec::with_capacity(self.node_count());
        let mut stack = vec![(self.root, false)];
        while let Some((t, expanded)) = stack.pop() {
            if expanded {
                out.push(t);
                continue;
            }
            if out.len() + stack.len() > self.node_count() {
                break;
            }
            stack.push((t, true));
            for &c in self.children[t].iter().rev() {
                stack.push((c, false));
            }
        }
        out
    }

    /// `γ(t)`, the union of bags in the subtree of every node.
    pub fn cones(&self) -> Vec<VertexSet> {
        let mut cone = self.bags.clone();
        for t in self.post_order() {
            if let Some(p) = self.parent[t] {
                let c = cone[t];
                cone[p] |= c;
            }
        }
        cone
    }
}

pub(crate) fn check_size(g: &Graph) -> Result<(), DecompositionError> {
    if g.fits_vertex_set() {
        Ok(())
    } else {
        Err(DecompositionError::TooManyVertices { n: g.vertex_count(), limit: VertexSet::CAPACITY })
    }
}

/// Derived per-node quantities: adhesion `σ(t)`, cone `γ(t)`, interior
/// `α(t) = γ(t) \ σ(t)` and the local graph `G_t = G[γ(t)] - E(G[σ(t)])`.
#[derive(Clone, Debug)]
pub struct NodeContext<'g> {
    pub node: NodeId,
    pub adhesion: VertexSet,
    pub cone: VertexSet,
    pub interior: VertexSet,
    pub local_graph: SubgraphView<'g>,
}

/// Computes a [`NodeContext`] for every node (indexed by node id), after
/// checking the tree-decomposition axioms.
pub fn derive_contexts<'g>(g: &'g Graph, td: &RootedDecomposition) -> Result<Vec<NodeContext<'g>>, DecompositionError> {
    if let CheckOutcome::Failed(ce) = verify::check_axioms(g, td) {
        return Err(DecompositionError::Axiom(ce));
    }
    let cones = td.cones();
    Ok((0..td.node_count())
        .map(|t| {
            let adhesion = td.adhesion(t);
            NodeContext {
                node: t,
                adhesion,
                cone: cones[t],
                interior: cones[t] - adhesion,
                local_graph: SubgraphView::induced_minus_inner(g, cones[t], adhesion),
            }
        })
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(vs: &[Vertex]) -> VertexSet {
        vs.iter().copied().collect()
    }

    #[test]
    fn single_node_context() {
        let g = Graph::new(3, [(0, 1), (1, 2)]).unwrap();
        let td = RootedDecomposition::single_bag(&g).unwrap();
        let ctx = derive_contexts(&g, &td).unwrap();
        assert_eq!(ctx.len(), 1);
        assert!(ctx[0].adhesion.is_empty());
        assert_eq!(ctx[0].cone, g.all_vertices());
        assert_eq!(ctx[0].interior, g.all_vertices());
        assert_eq!(ctx[0].local_graph.edges(), g.edges());
    }

    #[test]
    fn two_node_path_context() {
        // a-b-c with bags {a,b} (root) and {b,c}
        let g = Graph::new(3, [(0, 1), (1, 2)]).unwrap();
        let td = RootedDecomposition::new(3, vec![None, Some(0)], vec![set(&[0, 1]), set(&[1, 2])]).unwrap();
        let ctx = derive_contexts(&g, &td).unwrap();
        assert_eq!(ctx[1].adhesion, set(&[1]));
        assert_eq!(ctx[1].interior, set(&[2]));
        assert_eq!(ctx[1].local_graph.edges(), &[(1, 2)]);
        assert_eq!(ctx[0].cone, set(&[0, 1, 2]));
    }

    #[test]
    fn leaf_inside_parent_has_empty_interior() {
        let g = Graph::new(3, [(0, 1), (1, 2)]).unwrap();
        let td = RootedDecomposition::new(3, vec![None, Some(0)], vec![set(&[0, 1, 2]), set(&[1, 2])]).unwrap();
        let ctx = derive_contexts(&g, &td).unwrap();
        assert!(ctx[1].interior.is_empty());
        assert_eq!(ctx[1].cone, ctx[1].adhesion);
    }

    #[test]
    fn rejects_bad_trees() {
        assert!(matches!(
            RootedDecomposition::new(2, vec![Some(1), Some(0)], vec![set(&[0]), set(&[1])]),
            Err(DecompositionError::MalformedTree(_))
        ));
        assert!(matches!(
            RootedDecomposition::new(2, vec![None, None], vec![set(&[0]), set(&[1])]),
            Err(DecompositionError::MalformedTree(_))
        ));
        assert!(matches!(
            RootedDecomposition::new(2, vec![None, Some(2), Some(1)], vec![set(&[0]), set(&[1]), set(&[1])]),
            Err(DecompositionError::MalformedTree(_))
        ));
        assert_eq!(
            RootedDecomposition::new(2, vec![None], vec![set(&[0, 5])]),
            Err(DecompositionError::BagVertexOutOfRange { node: 0, vertex: 5 })
        );
    }

    #[test]
    fn missing_edge_is_an_axiom_error() {
        let g = Graph::new(3, [(0, 1), (1, 2)]).unwrap();
        let td = RootedDecomposition::new(3, vec![None], vec![set(&[0, 1])]).unwrap();
        assert!(matches!(derive_contexts(&g, &td), Err(DecompositionError::Axiom(_))));
    }
}
