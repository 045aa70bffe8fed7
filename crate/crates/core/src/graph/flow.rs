use std::collections::VecDeque;

use super::{is_connected, Graph, GraphError, Vertex};

/// A minimum edge cut: its size and the side containing vertex 0.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MinCut {
    pub size: usize,
    pub source_side: Vec<Vertex>,
}

/// Unit-capacity residual network. Each undirected edge becomes a pair of
/// arcs that are each other's reverse, both with capacity one.
struct Network {
    head: Vec<Vertex>,
    cap: Vec<i32>,
    out: Vec<Vec<usize>>,
}

impl Network {
    fn new(g: &Graph) -> Network {
        let mut net = Network {
            head: Vec::with_capacity(2 * g.edge_count()),
            cap: Vec::with_capacity(2 * g.edge_count()),
            out: vec![Vec::new(); g.vertex_count()],
        };
        for &(u, v) in g.edges() {
            net.out[u].push(net.head.len());
            net.head.push(v);
            net.cap.push(1);
            net.out[v].push(net.head.len());
            net.head.push(u);
            net.cap.push(1);
        }
        net
    }

    fn reset(&mut self) {
        self.cap.iter_mut().for_each(|c| *c = 1);
    }

    /// Augments along shortest paths until the flow reaches `limit` or no
    /// path remains. Returns the flow value.
    fn max_flow(&mut self, s: Vertex, t: Vertex, limit: usize) -> usize {
        let n = self.out.len();
        let mut flow = 0;
        let mut via = vec![usize::MAX; n];
        while flow < limit {
            via.iter_mut().for_each(|x| *x = usize::MAX);
            let mut queue = VecDeque::from([s]);
            let mut found = false;
            'bfs: while let Some(v) = queue.pop_front() {
                for &arc in &self.out[v] {
                    let w = self.head[arc];
                    if self.cap[arc] > 0 && w != s && via[w] == usize::MAX {
                        via[w] = arc;
                        if w == t {
                            found = true;
                            break 'bfs;
                        }
                        queue.push_back(w);
                    }
                }
            }
            if !found {
                break;
            }
            let mut w = t;
            while w != s {
                let arc = via[w];
                self.cap[arc] -= 1;
                self.cap[arc ^ 1] += 1;
                w = self.head[arc ^ 1];
            }
            flow += 1;
        }
        flow
    }

    fn residual_reach(&self, s: Vertex) -> Vec<bool> {
        let mut seen = vec![false; self.out.len()];
        seen[s] = true;
        let mut queue = VecDeque::from([s]);
        while let Some(v) = queue.pop_front() {
            for &arc in &self.out[v] {
                let w = self.head[arc];
                if self.cap[arc] > 0 && !seen[w] {
                    seen[w] = true;
                    queue.push_back(w);
                }
            }
        }
        seen
    }
}

/// Global minimum edge cut by max-flow from vertex 0 to every other vertex.
///
/// Returns `Ok(None)` for graphs with fewer than two vertices (no cut exists).
pub fn global_min_cut(g: &Graph) -> Result<Option<MinCut>, GraphError> {
    if !is_connected(g) {
        return Err(GraphError::Disconnected);
    }
    if g.vertex_count() < 2 {
        return Ok(None);
    }
    let mut net = Network::new(g);
    let mut best: Option<MinCut> = None;
    for t in 1..g.vertex_count() {
        net.reset();
        let limit = best.as_ref().map_or(usize::MAX, |b| b.size);
        let flow = net.max_flow(0, t, limit);
        if flow < limit {
            let reach = net.residual_reach(0);
            best = Some(MinCut { size: flow, source_side: (0..g.vertex_count()).filter(|&v| reach[v]).collect() });
        }
    }
    Ok(best)
}

/// Whether some non-trivial bipartition of a connected graph cuts at most `k` edges.
pub fn global_min_cut_at_most(g: &Graph, k: usize) -> Result<bool, GraphError> {
    Ok(global_min_cut(g)?.is_some_and(|c| c.size <= k))
}
