use std::ops::ControlFlow;

use crate::graph::{Graph, VertexSet};

/// Calls `f(side_a, cut_size)` for every non-trivial bipartition whose cut has
/// at most `k` edges. The last vertex is always on side B, so each
/// bipartition is visited once.
///
/// Walks all `2^(n-1)` bipartitions in Gray-code order, updating the cut size
/// incrementally. Only intended for small graphs.
pub fn for_each_small_cut<F>(g: &Graph, k: usize, mut f: F) -> ControlFlow<()>
where
    F: FnMut(VertexSet, usize) -> ControlFlow<()>,
{
    let n = g.vertex_count();
    if n < 2 {
        return ControlFlow::Continue(());
    }
    assert!(n <= 40, "exhaustive cut enumeration on {n} vertices");
    let mut side_a = VertexSet::empty();
    let mut cut: i64 = 0;
    for i in 1u64..(1u64 << (n - 1)) {
        let v = i.trailing_zeros() as usize;
        let nb = g.neighbor_set(v);
        let in_a = (nb & side_a).len() as i64;
        let in_b = nb.len() as i64 - in_a;
        if side_a.contains(v) {
            cut += in_a - in_b;
            side_a.remove(v);
        } else {
            cut += in_b - in_a;
            side_a.insert(v);
        }
        if cut as usize <= k {
            f(side_a, cut as usize)?;
        }
    }
    ControlFlow::Continue(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn counts_small_cuts_of_a_cycle() {
        let g = Graph::new(5, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]).unwrap();
        let mut by_size = [0usize; 6];
        let _ = for_each_small_cut(&g, 5, |a, c| {
            let direct = g.edges().iter().filter(|&&(u, v)| a.contains(u) != a.contains(v)).count();
            assert_eq!(direct, c);
            by_size[c] += 1;
            ControlFlow::Continue(())
        });
        // a 5-cycle has C(5,2) = 10 two-edge cuts and C(5,4) = 5 four-edge cuts
        assert_eq!(by_size, [0, 0, 10, 0, 5, 0]);
    }

    #[test]
    fn filters_by_budget() {
        let g = Graph::new(4, [(0, 1), (1, 2), (2, 3)]).unwrap();
        let mut seen = 0;
        let _ = for_each_small_cut(&g, 1, |_, c| {
            assert!(c <= 1);
            seen += 1;
            ControlFlow::Continue(())
        });
        assert_eq!(seen, 3);
    }
}
