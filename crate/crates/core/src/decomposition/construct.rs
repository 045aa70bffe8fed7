use std::collections::HashMap;
use std::ops::ControlFlow;

use super::{check_size, for_each_small_cut, verify, DecompositionError, NodeId, RootedDecomposition};
use crate::graph::{is_connected, Graph, VertexSet};

#[derive(Clone, Debug)]
pub struct ConstructOptions {
    /// Refuse graphs with more vertices than this; the search enumerates all
    /// bipartitions up front.
    pub size_limit: usize,
    /// Maximum number of candidate bags examined before giving up.
    pub search_budget: u64,
}

impl Default for ConstructOptions {
    fn default() -> Self {
        ConstructOptions { size_limit: 24, search_budget: 20_000_000 }
    }
}

pub fn construct(g: &Graph, k: usize) -> Result<RootedDecomposition, DecompositionError> {
    construct_with(g, k, &ConstructOptions::default())
}

/// Builds a compact decomposition with adhesion at most `k` whose bags are
/// `(k, k)`-edge-unbreakable, then verifies it.
///
/// Every node owns a region `α` (a connected vertex set with `|N(α)| <= k`,
/// or all of `V` at the root). The node's bag is `N(α) ∪ X` for a non-empty
/// `X ⊆ α`, and each component of `G[α \ X]` becomes a child region. Regions
/// are solved by exhaustive search with memoization, trying removed sets
/// `α \ X` by increasing size; among equal sizes the first in colex order of
/// positions wins. Any compact decomposition with these properties has this
/// shape, so the search fails only when none exists.
pub fn construct_with(g: &Graph, k: usize, opts: &ConstructOptions) -> Result<RootedDecomposition, DecompositionError> {
    check_size(g)?;
    let n = g.vertex_count();
    if n > opts.size_limit {
        return Err(DecompositionError::SizeLimitExceeded { n, limit: opts.size_limit });
    }
    if !is_connected(g) {
        return Err(DecompositionError::Disconnected);
    }
    if n == 0 {
        return RootedDecomposition::new(0, vec![None], vec![VertexSet::empty()]);
    }

    let all = g.all_vertices();
    let mut cuts = Vec::new();
    let _ = for_each_small_cut(g, k, |a, _| {
        if a.len() > k && (all - a).len() > k {
            cuts.push(a);
        }
        ControlFlow::Continue(())
    });

    let mut search = Search { g, k, all, cuts, memo: HashMap::new(), budget: opts.search_budget, spent: 0 };
    if !search.solve(all)? {
        return Err(DecompositionError::NotFound);
    }
    let mut parent = Vec::new();
    let mut bags = Vec::new();
    search.emit(all, None, &mut parent, &mut bags);
    let td = RootedDecomposition::new(n, parent, bags)?;
    let report = verify(g, &td, k);
    if !report.passed() {
        return Err(DecompositionError::SelfCheckFailed(Box::new(report)));
    }
    Ok(td)
}

struct Plan {
    bag: VertexSet,
    children: Vec<VertexSet>,
}

struct Search<'g> {
    g: &'g Graph,
    k: usize,
    all: VertexSet,
    // Small cuts with more than k vertices on each side; these are exactly the
    // cuts that can break a bag.
    cuts: Vec<VertexSet>,
    memo: HashMap<VertexSet, Option<Plan>>,
    budget: u64,
    spent: u64,
}

impl Search<'_> {
    fn unbreakable(&self, bag: VertexSet) -> bool {
        let k = self.k;
        self.cuts.iter().all(|&a| (bag & a).len() <= k || (bag & (self.all - a)).len() <= k)
    }

    fn solve(&mut self, region: VertexSet) -> Result<bool, DecompositionError> {
        if let Some(found) = self.memo.get(&region) {
            return Ok(found.is_some());
        }
        let adhesion = self.g.open_neighborhood(region);
        for size in 0..region.len() {
            for removed in region.subsets_of_size(size) {
                self.spent += 1;
                if self.spent > self.budget {
                    return Err(DecompositionError::SearchBudgetExceeded(self.budget));
                }
                let bag = adhesion | (region - removed);
                if !self.unbreakable(bag) {
                    continue;
                }
                let children = self.g.components_within(removed);
                if children.iter().any(|&c| self.g.open_neighborhood(c).len() > self.k) {
                    continue;
                }
                let mut ok = true;
                for &c in &children {
                    if !self.solve(c)? {
                        ok = false;
                        break;
                    }
                }
                if ok {
                    self.memo.insert(region, Some(Plan { bag, children }));
                    return Ok(true);
                }
            }
        }
        self.memo.insert(region, None);
        Ok(false)
    }

    /// Lays out the solved plan with node ids in preorder.
    fn emit(
        &self,
        region: VertexSet,
        parent_id: Option<NodeId>,
        parent: &mut Vec<Option<NodeId>>,
        bags: &mut Vec<VertexSet>,
    ) {
        let plan = self.memo[&region].as_ref().expect("region was solved");
        let id = bags.len();
        parent.push(parent_id);
        bags.push(plan.bag);
        for &c in &plan.children {
            self.emit(c, Some(id), parent, bags);
        }
    }
}
