use serde::Serialize;

use super::local::{BrokenSets, EdgeTable};
use super::{Cost, DpError, DpStats, DpStore};
use crate::decomposition::NodeId;
use crate::graph::{Edge, Vertex, VertexSet};
use crate::multiset::VertexMultiset;

/// One candidate set per broken child and per broken edge.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct CompatibleFamily {
    pub children: Vec<(NodeId, VertexMultiset)>,
    pub edges: Vec<(Edge, VertexMultiset)>,
    /// Sum of all members.
    pub combined: VertexMultiset,
}

/// Parameters shared by every family of one `(t, P)` pair.
#[derive(Clone, Copy, Debug)]
pub struct FamilyBounds<'a> {
    /// `σ(t)`.
    pub adhesion: VertexSet,
    /// `P`, a candidate set of `σ(t)`.
    pub p: &'a VertexMultiset,
    pub d: usize,
    pub k: usize,
}

impl FamilyBounds<'_> {
    fn cap(&self, v: Vertex) -> u32 {
        let d = self.d as u32;
        if self.adhesion.contains(v) {
            d.min(self.p.multiplicity(v))
        } else {
            d
        }
    }
}

/// Running multiplicities of the partial sum `P_z`.
struct Tally {
    counts: [u32; VertexSet::CAPACITY],
    total: u32,
}

impl Tally {
    fn new() -> Tally {
        Tally { counts: [0; VertexSet::CAPACITY], total: 0 }
    }

    fn try_add(&mut self, m: &VertexMultiset, bounds: &FamilyBounds<'_>) -> bool {
        if self.total + m.cardinality() > 2 * bounds.k as u32 {
            return false;
        }
        if m.entries().iter().any(|&(v, c)| self.counts[v] + c > bounds.cap(v)) {
            return false;
        }
        for &(v, c) in m.entries() {
            self.counts[v] += c;
        }
        self.total += m.cardinality();
        true
    }

    fn remove(&mut self, m: &VertexMultiset) {
        for &(v, c) in m.entries() {
            self.counts[v] -= c;
        }
        self.total -= m.cardinality();
    }
}

fn assemble(broken: &BrokenSets, picks: &[VertexMultiset]) -> CompatibleFamily {
    let (edge_picks, child_picks) = picks.split_at(broken.edges.len());
    let combined = picks.iter().fold(VertexMultiset::new(), |acc, m| acc.sum_union(m));
    CompatibleFamily {
        children: broken.children.iter().zip(child_picks).map(|(c, m)| (c.child, m.clone())).collect(),
        edges: broken.edges.iter().zip(edge_picks).map(|(e, m)| (e.edge, m.clone())).collect(),
        combined,
    }
}

/// Every family for `A_s` (described by its broken sets) meeting the caps:
/// d-matched child candidates, 1-matched edge candidates, `|P_z| <= 2k`,
/// `m_{P_z}(v) <= d`, and `m_{P_z}(v) <= m_P(v)` on `σ(t)`.
///
/// Families are listed in depth-first order over broken edges first, then
/// broken children, each ranging over its candidate list.
pub fn enumerate_compatible_families(
    broken: &BrokenSets,
    store: &DpStore,
    bounds: &FamilyBounds<'_>,
) -> Result<Vec<CompatibleFamily>, DpError> {
    if broken.len() > bounds.k {
        return Err(DpError::Precondition(format!(
            "{} broken children and edges exceed k = {}",
            broken.len(),
            bounds.k
        )));
    }
    let mut options: Vec<Vec<VertexMultiset>> =
        broken.edges.iter().map(|e| EdgeTable::candidates(e.edge).to_vec()).collect();
    options.extend(broken.children.iter().map(|c| store.table(c.child).candidates().to_vec()));

    fn walk(
        at: usize,
        options: &[Vec<VertexMultiset>],
        bounds: &FamilyBounds<'_>,
        tally: &mut Tally,
        picks: &mut Vec<VertexMultiset>,
        out: &mut Vec<Vec<VertexMultiset>>,
    ) {
        if at == options.len() {
            out.push(picks.clone());
            return;
        }
        for m in &options[at] {
            if tally.try_add(m, bounds) {
                picks.push(m.clone());
                walk(at + 1, options, bounds, tally, picks, out);
                picks.pop();
                tally.remove(m);
            }
        }
    }

    let mut raw = Vec::new();
    walk(0, &options, bounds, &mut Tally::new(), &mut Vec::new(), &mut raw);
    Ok(raw.iter().map(|picks| assemble(broken, picks)).collect())
}

/// `cs(t, A_s, F)`: saturating sum of the child entries and edge entries
/// selected by the family.
pub fn cs(
    broken: &BrokenSets,
    family: &CompatibleFamily,
    store: &DpStore,
    etab: &EdgeTable,
    k: usize,
    stats: &mut DpStats,
) -> Result<Cost, DpError> {
    let mut total = Cost::ZERO;
    for (c, (child, p_c)) in broken.children.iter().zip(&family.children) {
        debug_assert_eq!(c.child, *child);
        let value = store.lookup(c.child, c.side, p_c, 1).ok_or(DpError::MissingChildEntry { child: c.child })?;
        total = total.add(value, k);
    }
    for (e, (edge, p_e)) in broken.edges.iter().zip(&family.edges) {
        debug_assert_eq!(e.edge, *edge);
        total = total.add(etab.value(e.edge, e.side, p_e), k);
    }
    stats.families_evaluated += 1;
    if total.value().is_some_and(|v| v < broken.len()) {
        stats.bound_violations += 1;
        debug_assert!(false, "family cost {total:?} below {} broken items", broken.len());
    }
    Ok(total)
}

struct Pick {
    multiset: VertexMultiset,
    cost: usize,
}

/// Minimum of `cs` over all compatible families, with the family attaining
/// it. Returns `None` when every family costs more than `k` (or none exists).
///
/// Branch and bound over the same search space as
/// [`enumerate_compatible_families`]; options with an infinite entry are
/// skipped since they can never be part of a finite sum.
pub fn min_cost_family(
    broken: &BrokenSets,
    store: &DpStore,
    etab: &EdgeTable,
    bounds: &FamilyBounds<'_>,
    stats: &mut DpStats,
) -> Result<Option<(usize, CompatibleFamily)>, DpError> {
    let k = bounds.k;
    if broken.len() > k {
        stats.pruned_sides += 1;
        return Ok(None);
    }
    let mut items: Vec<Vec<Pick>> = Vec::with_capacity(broken.len());
    for e in &broken.edges {
        items.push(
            EdgeTable::candidates(e.edge)
                .into_iter()
                .filter_map(|m| {
                    let cost = etab.value(e.edge, e.side, &m).value()?;
                    Some(Pick { multiset: m, cost })
                })
                .collect(),
        );
    }
    // options are sorted by cost so the search can stop at the first one
    // that cannot beat the incumbent
    for c in &broken.children {
        let table = store.table(c.child);
        let s_idx = table.side_index(c.side);
        let mut opts: Vec<Pick> = table
            .candidates()
            .iter()
            .enumerate()
            .filter_map(|(j, m)| {
                let cost = table.value(s_idx, j).value()?;
                Some(Pick { multiset: m.clone(), cost })
            })
            .collect();
        opts.sort_by_key(|o| o.cost);
        items.push(opts);
    }
    if items.iter().any(Vec::is_empty) {
        return Ok(None);
    }
    // suffix[i]: cheapest possible completion of items i..
    let mut suffix = vec![0usize; items.len() + 1];
    for i in (0..items.len()).rev() {
        suffix[i] = suffix[i + 1] + items[i].iter().map(|o| o.cost).min().unwrap_or(0);
    }
    if suffix[0] > k {
        return Ok(None);
    }

    struct Search<'s> {
        items: &'s [Vec<Pick>],
        suffix: &'s [usize],
        bounds: &'s FamilyBounds<'s>,
        tally: Tally,
        picks: Vec<usize>,
        best: usize,
        best_picks: Option<Vec<usize>>,
    }

    impl Search<'_> {
        fn walk(&mut self, at: usize, cost: usize) {
            if cost + self.suffix[at] >= self.best {
                return;
            }
            if at == self.items.len() {
                self.best = cost;
                self.best_picks = Some(self.picks.clone());
                return;
            }
            for (j, o) in self.items[at].iter().enumerate() {
                if cost + o.cost + self.suffix[at + 1] >= self.best {
                    break;
                }
                if self.tally.try_add(&o.multiset, self.bounds) {
                    self.picks.push(j);
                    self.walk(at + 1, cost + o.cost);
                    self.picks.pop();
                    self.tally.remove(&o.multiset);
                }
            }
        }
    }

    let mut search = Search {
        items: &items,
        suffix: &suffix,
        bounds,
        tally: Tally::new(),
        picks: Vec::new(),
        best: k + 1,
        best_picks: None,
    };
    search.walk(0, 0);
    let Some(picks) = search.best_picks else {
        return Ok(None);
    };
    let chosen: Vec<VertexMultiset> = picks.iter().zip(&items).map(|(&j, opts)| opts[j].multiset.clone()).collect();
    let family = assemble(broken, &chosen);
    let check = cs(broken, &family, store, etab, k, stats)?;
    debug_assert_eq!(check.value(), Some(search.best));
    Ok(Some((search.best, family)))
}
