use super::local::broken_sets;
use super::store::Choice;
use super::{min_cost_family, DpError, DpRun, DpStats, FamilyBounds};
use crate::decomposition::NodeId;
use crate::graph::{edge_cut, is_d_cut, Bipartition, VertexSet};

impl DpRun<'_> {
    /// Rebuilds a partition of `G_t` attaining entry `(s_idx, p_idx)` by
    /// following the stored choices. Returns its `A` side.
    fn realize(&self, t: NodeId, s_idx: usize, p_idx: usize) -> Result<VertexSet, DpError> {
        let node = &self.nodes[t];
        let table = self.store.table(t);
        match table.choice(s_idx, p_idx) {
            Choice::Unreachable => {
                Err(DpError::WitnessCertificationFailed(format!("followed an infinite entry at node {t}")))
            }
            Choice::Child { child, candidate } => {
                let a_c = self.realize(child, 0, candidate)?;
                let sigma_c = self.nodes[child].adhesion;
                // The child's cut keeps its adhesion on one side; the rest of
                // G_t joins that side.
                if (a_c & sigma_c).is_empty() {
                    Ok(a_c)
                } else {
                    Ok(a_c | (node.cone - self.nodes[child].cone))
                }
            }
            Choice::Bag { side } => {
                let p = &table.candidates()[p_idx];
                let broken = broken_sets(node, side);
                let bounds = FamilyBounds { adhesion: node.adhesion, p, d: self.d, k: self.k };
                let (_, family) =
                    min_cost_family(&broken, &self.store, &self.etabs[t], &bounds, &mut DpStats::default())?
                        .ok_or_else(|| {
                            DpError::WitnessCertificationFailed(format!("no family realizes node {t} side {side:?}"))
                        })?;
                let mut a = side;
                for &(c, sigma_c) in &node.children {
                    let cone_c = self.nodes[c].cone;
                    if let Some((_, p_c)) = family.children.iter().find(|(child, _)| *child == c) {
                        let table_c = self.store.table(c);
                        let j = table_c.candidate_index(p_c).ok_or(DpError::MissingChildEntry { child: c })?;
                        let a_c = self.realize(c, table_c.side_index(side), j)?;
                        if a_c & sigma_c == side & sigma_c {
                            a |= a_c;
                        } else {
                            a |= cone_c - a_c;
                        }
                    } else if !sigma_c.is_empty() && sigma_c.is_subset(side) {
                        a |= cone_c;
                    }
                }
                Ok(a)
            }
        }
    }

    /// A d-cut of `G` with at most `k` edges, reconstructed from the root
    /// entry and certified before it is returned. `None` when the root entry
    /// is ∞.
    pub fn witness(&self) -> Result<Option<Bipartition>, DpError> {
        let Some(bound) = self.root_value().value() else {
            return Ok(None);
        };
        let side = self.realize(self.td.root(), 0, 0)?;
        let n = self.g.vertex_count();
        let p = Bipartition::from_set(n, side);
        let fail = |why: String| Err(DpError::WitnessCertificationFailed(why));
        let cut = match edge_cut(self.g, &p) {
            Ok(cut) => cut.len(),
            Err(e) => return fail(e.to_string()),
        };
        if !is_d_cut(self.g, &p, self.d).unwrap_or(false) {
            return fail(format!("{p:?} is not a {}-cut", self.d));
        }
        if cut > bound || cut > self.k {
            return fail(format!("cut of {cut} edges exceeds the table value {bound}"));
        }
        Ok(Some(p))
    }
}
