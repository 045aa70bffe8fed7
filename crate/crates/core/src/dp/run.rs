use super::families::{enumerate_compatible_families, min_cost_family, CompatibleFamily, FamilyBounds};
use super::local::{broken_sets, BrokenSets, EdgeTable, LocalNode};
use super::sides::{colorcode_sides, enumerated_sides, randomized_rounds, small_subset_count, FamilyMode, MinBetaMode};
use super::store::{Choice, DpStore, NodeTable};
use super::{Cost, DpError, DpOptions, DpStats};
use crate::decomposition::{derive_contexts, NodeId, RootedDecomposition};
use crate::family::SetFamily;
use crate::graph::{Graph, VertexSet};
use crate::multiset::VertexMultiset;

#[derive(Clone, Debug)]
struct Side {
    side: VertexSet,
    broken: BrokenSets,
}

/// A filled table set for one graph, decomposition and `(k, d)`.
#[derive(Clone, Debug)]
pub struct DpRun<'g> {
    pub(super) g: &'g Graph,
    pub(super) td: RootedDecomposition,
    pub(super) k: usize,
    pub(super) d: usize,
    pub(super) nodes: Vec<LocalNode>,
    pub(super) etabs: Vec<EdgeTable>,
    // node -> side index -> candidate sides
    sides: Vec<Vec<Vec<Side>>>,
    modes: Vec<MinBetaMode>,
    pub(super) store: DpStore,
    stats: DpStats,
}

impl<'g> DpRun<'g> {
    /// Fills every table bottom-up.
    ///
    /// The decomposition must satisfy the tree-decomposition axioms; the
    /// table semantics additionally assume it is compact with adhesion at
    /// most `k` and `(k, k)`-edge-unbreakable bags. Requires `d >= 1` and
    /// `k >= 2`.
    pub fn run(
        g: &'g Graph,
        td: &RootedDecomposition,
        k: usize,
        d: usize,
        opts: &DpOptions,
    ) -> Result<DpRun<'g>, DpError> {
        if d == 0 {
            return Err(DpError::Precondition("d must be at least 1".into()));
        }
        if k < 2 {
            return Err(DpError::Precondition(
                "the table recurrence needs k >= 2; smaller budgets are decided by minimum cut".into(),
            ));
        }
        let contexts = derive_contexts(g, td)?;
        let nodes: Vec<LocalNode> = contexts.iter().map(|c| LocalNode::from_context(td, c)).collect();
        let etabs = nodes.iter().map(|n| EdgeTable::assign(n, k)).collect();
        let tables = nodes.iter().map(|n| NodeTable::new(n.adhesion, d, k)).collect::<Result<Vec<_>, _>>()?;
        let stats = DpStats {
            nodes: nodes.len(),
            max_bag: td.max_bag_size(),
            max_adhesion: td.max_adhesion(),
            table_entries: tables.iter().map(NodeTable::entry_count).sum(),
            ..DpStats::default()
        };
        let mut run = DpRun {
            g,
            td: td.clone(),
            k,
            d,
            sides: vec![Vec::new(); nodes.len()],
            modes: vec![MinBetaMode::Auto; nodes.len()],
            nodes,
            etabs,
            store: DpStore { tables },
            stats,
        };
        for t in td.post_order() {
            run.fill_node(t, opts)?;
        }
        Ok(run)
    }

    fn fill_node(&mut self, t: NodeId, opts: &DpOptions) -> Result<(), DpError> {
        let node = &self.nodes[t];
        let count = small_subset_count(node.bag.len(), self.k);
        let mode = match opts.min_beta {
            MinBetaMode::Auto if count <= opts.enumerate_budget => MinBetaMode::Enumerate,
            MinBetaMode::Auto => MinBetaMode::ColorCode,
            MinBetaMode::Enumerate if count > opts.enumerate_budget => {
                return Err(DpError::EnumerateBudget { node: t, count, budget: opts.enumerate_budget })
            }
            m => m,
        };
        let candidates = if mode == MinBetaMode::Enumerate {
            self.stats.enumerate_nodes += 1;
            enumerated_sides(node, self.k)
        } else {
            let family = match opts.family {
                FamilyMode::Exhaustive => SetFamily::exhaustive(node.bag)?,
                FamilyMode::Randomized { seed, rounds } => SetFamily::randomized(
                    node.bag,
                    seed.wrapping_add(t as u64),
                    rounds.unwrap_or_else(|| randomized_rounds(node.bag.len(), self.k)),
                ),
            };
            self.stats.colorcode_nodes += 1;
            self.stats.family_members += family.len();
            colorcode_sides(node, &family, self.k)
        };
        self.modes[t] = mode;
        self.stats.candidate_sides += candidates.len();

        let table = self.store.table(t);
        let mut grouped = vec![Vec::new(); table.side_count()];
        for side in candidates {
            let s_idx = table.side_index(side);
            grouped[s_idx].push(Side { side, broken: broken_sets(node, side) });
        }
        self.sides[t] = grouped;

        let mut stats = std::mem::take(&mut self.stats);
        let mut filled = Vec::new();
        for s_idx in 0..table.side_count() {
            for p_idx in 0..table.candidates().len() {
                let (mut value, mut choice) = match self.min_beta_with(t, s_idx, p_idx, &mut stats)? {
                    (v, Some(side)) => (v, Choice::Bag { side }),
                    (v, None) => (v, Choice::Unreachable),
                };
                if s_idx == 0 {
                    if let (v, Some((child, candidate))) = self.min_c_with_choice(t, p_idx) {
                        if v < value {
                            value = v;
                            choice = Choice::Child { child, candidate };
                        }
                    }
                }
                filled.push((s_idx, p_idx, value, choice));
            }
        }
        self.stats = stats;
        let table = &mut self.store.tables[t];
        for (s_idx, p_idx, value, choice) in filled {
            table.set(s_idx, p_idx, value, choice);
        }
        Ok(())
    }

    fn bounds<'p>(&self, t: NodeId, p: &'p VertexMultiset) -> FamilyBounds<'p> {
        FamilyBounds { adhesion: self.nodes[t].adhesion, p, d: self.d, k: self.k }
    }

    fn min_beta_with(
        &self,
        t: NodeId,
        s_idx: usize,
        p_idx: usize,
        stats: &mut DpStats,
    ) -> Result<(Cost, Option<VertexSet>), DpError> {
        let p = &self.store.table(t).candidates()[p_idx];
        let bounds = self.bounds(t, p);
        let mut best = Cost::INF;
        let mut arg = None;
        for s in &self.sides[t][s_idx] {
            if let Some((v, _)) = min_cost_family(&s.broken, &self.store, &self.etabs[t], &bounds, stats)? {
                let v = Cost::capped(v, self.k);
                if v < best {
                    best = v;
                    arg = Some(s.side);
                }
            }
        }
        Ok((best, arg))
    }

    fn min_c_with_choice(&self, t: NodeId, p_idx: usize) -> (Cost, Option<(NodeId, usize)>) {
        let node = &self.nodes[t];
        let p = &self.store.table(t).candidates()[p_idx];
        let mut best = Cost::INF;
        let mut arg = None;
        for &(c, _) in &node.children {
            let table = self.store.table(c);
            for (j, p_c) in table.candidates().iter().enumerate() {
                let fits = p_c.entries().iter().all(|&(v, m)| !node.adhesion.contains(v) || m <= p.multiplicity(v));
                if fits && table.value(0, j) < best {
                    best = table.value(0, j);
                    arg = Some((c, j));
                }
            }
        }
        (best, arg)
    }

    fn check_side(&self, t: NodeId, side: VertexSet) -> Result<(), DpError> {
        let bag = self.nodes[t].bag;
        if !side.is_subset(bag) || side.is_empty() || side == bag || side.len() > self.k {
            return Err(DpError::Precondition(format!(
                "{side:?} is not a compatible side of bag {bag:?} for k = {}",
                self.k
            )));
        }
        Ok(())
    }

    fn check_candidate(&self, t: NodeId, p: &VertexMultiset) -> Result<(), DpError> {
        match self.store.table(t).candidate_index(p) {
            Some(_) => Ok(()),
            None => Err(DpError::Precondition(format!("{p:?} is not a candidate set of node {t}"))),
        }
    }

    /// `mcs(t, A_s, P)` with the family attaining it, or `None` for ∞.
    pub fn mcs_family(
        &self,
        t: NodeId,
        side: VertexSet,
        p: &VertexMultiset,
    ) -> Result<Option<(usize, CompatibleFamily)>, DpError> {
        self.check_side(t, side)?;
        self.check_candidate(t, p)?;
        let broken = broken_sets(&self.nodes[t], side);
        min_cost_family(&broken, &self.store, &self.etabs[t], &self.bounds(t, p), &mut DpStats::default())
    }

    /// `mcs(t, A_s, P)`.
    pub fn mcs(&self, t: NodeId, side: VertexSet, p: &VertexMultiset) -> Result<Cost, DpError> {
        Ok(match self.mcs_family(t, side, p)? {
            Some((v, _)) => Cost::capped(v, self.k),
            None => Cost::INF,
        })
    }

    /// All compatible families for `A_s` and `P`; `A_s` must break at most
    /// `k` children and edges.
    pub fn compatible_families(
        &self,
        t: NodeId,
        side: VertexSet,
        p: &VertexMultiset,
    ) -> Result<Vec<CompatibleFamily>, DpError> {
        self.check_side(t, side)?;
        self.check_candidate(t, p)?;
        let broken = broken_sets(&self.nodes[t], side);
        enumerate_compatible_families(&broken, &self.store, &self.bounds(t, p))
    }

    /// `MIN_c` for candidate `p_idx` of node `t`.
    pub fn min_c(&self, t: NodeId, p_idx: usize) -> Cost {
        self.min_c_with_choice(t, p_idx).0
    }

    /// `MIN_β` over the sides this run generated for `t`.
    pub fn min_beta(&self, t: NodeId, s_idx: usize, p_idx: usize) -> Result<Cost, DpError> {
        Ok(self.min_beta_with(t, s_idx, p_idx, &mut DpStats::default())?.0)
    }

    /// Recomputes `M[t, S, P, 1]` from scratch for an explicit `S`,
    /// enumerating every small side of the bag regardless of the mode used
    /// during the fill and without going through the canonical side index.
    pub fn entry_for_side(&self, t: NodeId, s: VertexSet, p: &VertexMultiset) -> Result<Cost, DpError> {
        self.check_candidate(t, p)?;
        let node = &self.nodes[t];
        let s = s & node.adhesion;
        let s_bar = node.adhesion - s;
        let mut best = Cost::INF;
        for side in enumerated_sides(node, self.k) {
            let inter = side & node.adhesion;
            if inter == s || inter == s_bar {
                best = best.min(self.mcs(t, side, p)?);
            }
        }
        if s.is_empty() || s_bar.is_empty() {
            let p_idx = self.store.table(t).candidate_index(p).expect("checked above");
            best = best.min(self.min_c(t, p_idx));
        }
        Ok(best)
    }

    /// Candidate sides generated for `(t, S)`.
    pub fn sides(&self, t: NodeId, s_idx: usize) -> impl Iterator<Item = VertexSet> + '_ {
        self.sides[t][s_idx].iter().map(|s| s.side)
    }

    /// The side-generation mode actually used at `t`.
    pub fn mode(&self, t: NodeId) -> MinBetaMode {
        self.modes[t]
    }

    /// `M[r, ∅, ∅, 1]` at the root.
    pub fn root_value(&self) -> Cost {
        self.store.table(self.td.root()).value(0, 0)
    }

    pub fn store(&self) -> &DpStore {
        &self.store
    }

    pub fn stats(&self) -> &DpStats {
        &self.stats
    }

    pub fn node(&self, t: NodeId) -> &LocalNode {
        &self.nodes[t]
    }

    pub fn decomposition(&self) -> &RootedDecomposition {
        &self.td
    }

    pub fn graph(&self) -> &'g Graph {
        self.g
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn d(&self) -> usize {
        self.d
    }
}
