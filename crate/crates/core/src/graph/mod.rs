//! Simple undirected graphs, bipartitions and the cut predicates built on them.

mod flow;
mod vertex_set;

use std::collections::VecDeque;

use serde::{Deserialize, Serialize};
use thiserror::Error;

pub use flow::{global_min_cut, global_min_cut_at_most, MinCut};
pub use vertex_set::{Subsets, VertexSet};

/// Dense vertex id in `0..n`.
pub type Vertex = usize;

/// Undirected edge stored with the smaller endpoint first.
pub type Edge = (Vertex, Vertex);

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("vertex {vertex} out of range for a graph with {n} vertices")]
    VertexOutOfRange { vertex: Vertex, n: usize },
    #[error("self-loop on vertex {0}")]
    SelfLoop(Vertex),
    #[error("parallel edge {{{0}, {1}}}")]
    ParallelEdge(Vertex, Vertex),
    #[error("invalid bipartition: {0}")]
    InvalidBipartition(String),
    #[error("edge {{{0}, {1}}} is not in the graph")]
    UnknownEdge(Vertex, Vertex),
    #[error("graph is disconnected")]
    Disconnected,
    #[error("graph has {n} vertices, limit is {limit}")]
    TooManyVertices { n: usize, limit: usize },
}

pub(crate) fn normalize(u: Vertex, v: Vertex) -> Edge {
    if u <= v {
        (u, v)
    } else {
        (v, u)
    }
}

/// Simple undirected graph on the vertices `0..n`.
///
/// Immutable once built. Adjacency lists are sorted and the edge list is
/// sorted lexicographically.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    edges: Vec<Edge>,
    adjacency: Vec<Vec<Vertex>>,
    // Only populated when n fits in a VertexSet.
    neighbor_sets: Vec<VertexSet>,
}

impl Graph {
    /// Builds a graph, rejecting self-loops, parallel edges and
    /// out-of-range endpoints.
    pub fn new<I>(n: usize, edges: I) -> Result<Graph, GraphError>
    where
        I: IntoIterator<Item = (Vertex, Vertex)>,
    {
        let mut list = Vec::new();
        for (u, v) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(GraphError::VertexOutOfRange { vertex: w, n });
                }
            }
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            list.push(normalize(u, v));
        }
        list.sort_unstable();
        if let Some(w) = list.windows(2).find(|w| w[0] == w[1]) {
            return Err(GraphError::ParallelEdge(w[0].0, w[0].1));
        }
        let mut adjacency = vec![Vec::new(); n];
        for &(u, v) in &list {
            adjacency[u].push(v);
            adjacency[v].push(u);
        }
        for adj in &mut adjacency {
            adj.sort_unstable();
        }
        let neighbor_sets = if n <= VertexSet::CAPACITY {
            adjacency.iter().map(|adj| adj.iter().copied().collect()).collect()
        } else {
            Vec::new()
        };
        Ok(Graph { n, edges: list, adjacency, neighbor_sets })
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn vertices(&self) -> std::ops::Range<Vertex> {
        0..self.n
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn neighbors(&self, v: Vertex) -> &[Vertex] {
        &self.adjacency[v]
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.adjacency[v].len()
    }

    pub fn max_degree(&self) -> usize {
        self.adjacency.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        u < self.n && self.adjacency[u].binary_search(&v).is_ok()
    }

    /// Whether the bitset views (`neighbor_set`, `all_vertices`) are available.
    pub fn fits_vertex_set(&self) -> bool {
        self.n <= VertexSet::CAPACITY
    }

    /// Neighborhood as a bitset. Panics if the graph has more than 64 vertices.
    pub fn neighbor_set(&self, v: Vertex) -> VertexSet {
        self.neighbor_sets[v]
    }

    pub fn all_vertices(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    /// Open neighborhood `N(X)` of a vertex set.
    pub fn open_neighborhood(&self, set: VertexSet) -> VertexSet {
        let mut out = VertexSet::empty();
        for v in set {
            out |= self.neighbor_sets[v];
        }
        out - set
    }

    /// Whether `G[set]` is connected. The empty set counts as disconnected.
    pub fn is_connected_within(&self, set: VertexSet) -> bool {
        match set.min() {
            None => false,
            Some(start) => self.reach_within(start, set) == set,
        }
    }

    /// Vertices reachable from `start` inside `G[set]`.
    pub fn reach_within(&self, start: Vertex, set: VertexSet) -> VertexSet {
        let mut seen = VertexSet::singleton(start);
        let mut frontier = seen;
        while !frontier.is_empty() {
            let mut next = VertexSet::empty();
            for v in frontier {
                next |= self.neighbor_sets[v];
            }
            next = (next & set) - seen;
            seen |= next;
            frontier = next;
        }
        seen
    }

    /// Connected components of `G[set]`, ordered by smallest member.
    pub fn components_within(&self, set: VertexSet) -> Vec<VertexSet> {
        let mut rest = set;
        let mut out = Vec::new();
        while let Some(v) = rest.min() {
            let comp = self.reach_within(v, rest);
            rest = rest - comp;
            out.push(comp);
        }
        out
    }
}

/// Edges of `G[V']` that survive after deleting every edge inside `removed`.
///
/// Used for the local graphs `G[γ(t)] - E(G[σ(t)])` of decomposition nodes.
#[derive(Clone, Debug)]
pub struct SubgraphView<'g> {
    parent: &'g Graph,
    vertices: VertexSet,
    edges: Vec<Edge>,
}

impl<'g> SubgraphView<'g> {
    pub fn induced(parent: &'g Graph, vertices: VertexSet) -> Self {
        Self::induced_minus_inner(parent, vertices, VertexSet::empty())
    }

    pub fn induced_minus_inner(parent: &'g Graph, vertices: VertexSet, removed: VertexSet) -> Self {
        let edges = parent
            .edges()
            .iter()
            .copied()
            .filter(|&(u, v)| vertices.contains(u) && vertices.contains(v))
            .filter(|&(u, v)| !(removed.contains(u) && removed.contains(v)))
            .collect();
        SubgraphView { parent, vertices, edges }
    }

    pub fn parent(&self) -> &'g Graph {
        self.parent
    }

    pub fn vertices(&self) -> VertexSet {
        self.vertices
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    /// Crossing edges of this subgraph for the side `a` (everything else is the other side).
    pub fn crossing_edges(&self, a: VertexSet) -> impl Iterator<Item = Edge> + '_ {
        self.edges.iter().copied().filter(move |&(u, v)| a.contains(u) != a.contains(v))
    }
}

/// A partition `(A, B)` of the vertex set. Both sides are kept sorted.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Bipartition {
    pub side_a: Vec<Vertex>,
    pub side_b: Vec<Vertex>,
}

impl Bipartition {
    /// Side `a` as given, side `b` is everything else in `0..n`.
    pub fn from_side(n: usize, side_a: impl IntoIterator<Item = Vertex>) -> Bipartition {
        let mut in_a = vec![false; n];
        for v in side_a {
            in_a[v] = true;
        }
        let (a, b): (Vec<_>, Vec<_>) = (0..n).partition(|&v| in_a[v]);
        Bipartition { side_a: a, side_b: b }
    }

    pub fn from_set(n: usize, side_a: VertexSet) -> Bipartition {
        Self::from_side(n, side_a.iter())
    }

    pub fn swapped(&self) -> Bipartition {
        Bipartition { side_a: self.side_b.clone(), side_b: self.side_a.clone() }
    }

    /// A partition is a cut when both sides are non-empty.
    pub fn is_cut(&self) -> bool {
        !self.side_a.is_empty() && !self.side_b.is_empty()
    }

    /// Membership vector (`true` for side a), validating that the sides
    /// exactly partition `0..n`.
    pub fn membership(&self, n: usize) -> Result<Vec<bool>, GraphError> {
        let mut seen = vec![None; n];
        for (side, list) in [(true, &self.side_a), (false, &self.side_b)] {
            for &v in list.iter() {
                if v >= n {
                    return Err(GraphError::VertexOutOfRange { vertex: v, n });
                }
                if seen[v].is_some() {
                    return Err(GraphError::InvalidBipartition(format!("vertex {v} appears more than once")));
                }
                seen[v] = Some(side);
            }
        }
        seen.into_iter()
            .enumerate()
            .map(|(v, s)| s.ok_or_else(|| GraphError::InvalidBipartition(format!("vertex {v} is on neither side"))))
            .collect()
    }
}

/// Connected components, each sorted, ordered by smallest member.
pub fn connected_components(g: &Graph) -> Vec<Vec<Vertex>> {
    let mut comp = vec![usize::MAX; g.vertex_count()];
    let mut out: Vec<Vec<Vertex>> = Vec::new();
    for s in g.vertices() {
        if comp[s] != usize::MAX {
            continue;
        }
        let id = out.len();
        let mut members = vec![s];
        comp[s] = id;
        let mut queue = VecDeque::from([s]);
        while let Some(v) = queue.pop_front() {
            for &u in g.neighbors(v) {
                if comp[u] == usize::MAX {
                    comp[u] = id;
                    members.push(u);
                    queue.push_back(u);
                }
            }
        }
        members.sort_unstable();
        out.push(members);
    }
    out
}

pub fn is_connected(g: &Graph) -> bool {
    connected_components(g).len() <= 1
}

/// Edges with one endpoint on each side, sorted.
pub fn edge_cut(g: &Graph, p: &Bipartition) -> Result<Vec<Edge>, GraphError> {
    let in_a = p.membership(g.vertex_count())?;
    Ok(g.edges().iter().copied().filter(|&(u, v)| in_a[u] != in_a[v]).collect())
}

/// True iff `p` is a cut and every vertex has at most `d` neighbors across it.
pub fn is_d_cut(g: &Graph, p: &Bipartition, d: usize) -> Result<bool, GraphError> {
    let cut = edge_cut(g, p)?;
    Ok(p.is_cut() && incidence_within(g.vertex_count(), &cut, d))
}

/// True iff every vertex is incident to at most `d` of `edges`.
pub fn is_d_matching(g: &Graph, edges: &[Edge], d: usize) -> Result<bool, GraphError> {
    for &(u, v) in edges {
        if !g.has_edge(u, v) {
            return Err(GraphError::UnknownEdge(u, v));
        }
    }
    Ok(incidence_within(g.vertex_count(), edges, d))
}

fn incidence_within(n: usize, edges: &[Edge], d: usize) -> bool {
    let mut count = vec![0usize; n];
    for &(u, v) in edges {
        count[u] += 1;
        count[v] += 1;
    }
    count.into_iter().all(|c| c <= d)
}
