use std::ops::ControlFlow;

use serde::{Deserialize, Serialize};

use super::{for_each_small_cut, NodeId, RootedDecomposition};
use crate::graph::{Graph, Vertex, VertexSet};

/// A concrete witness that one property does not hold.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Counterexample {
    VertexCountMismatch {
        expected: usize,
        found: usize,
    },
    TooManyNodes {
        nodes: usize,
        limit: usize,
    },
    UncoveredVertex {
        vertex: Vertex,
    },
    UncoveredEdge {
        u: Vertex,
        v: Vertex,
    },
    /// The nodes containing `vertex` do not form a subtree.
    ScatteredVertex {
        vertex: Vertex,
    },
    EmptyInterior {
        node: NodeId,
    },
    DisconnectedInterior {
        node: NodeId,
    },
    NeighborhoodMismatch {
        node: NodeId,
        adhesion: VertexSet,
        neighborhood: VertexSet,
    },
    AdhesionTooLarge {
        node: NodeId,
        size: usize,
    },
    BreakableBag {
        node: NodeId,
        side_a: VertexSet,
        cut_size: usize,
    },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CheckOutcome {
    Passed,
    Failed(Counterexample),
    Skipped { reason: String },
}

impl CheckOutcome {
    pub fn is_failed(&self) -> bool {
        matches!(self, CheckOutcome::Failed(_))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub k: usize,
    pub axioms: CheckOutcome,
    pub compactness: CheckOutcome,
    pub adhesion: CheckOutcome,
    pub unbreakability: CheckOutcome,
}

impl VerificationReport {
    /// True when no check failed. Skipped checks do not count as failures.
    pub fn passed(&self) -> bool {
        self.checks().iter().all(|(_, c)| !c.is_failed())
    }

    pub fn checks(&self) -> [(&'static str, &CheckOutcome); 4] {
        [
            ("axioms", &self.axioms),
            ("compactness", &self.compactness),
            ("adhesion", &self.adhesion),
            ("unbreakability", &self.unbreakability),
        ]
    }
}

#[derive(Clone, Debug)]
pub struct VerifyOptions {
    /// Unbreakability is checked by enumerating every bipartition, so it is
    /// skipped above this many vertices.
    pub unbreakability_limit: usize,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions { unbreakability_limit: 24 }
    }
}

pub fn verify(g: &Graph, td: &RootedDecomposition, k: usize) -> VerificationReport {
    verify_with(g, td, k, &VerifyOptions::default())
}

pub fn verify_with(g: &Graph, td: &RootedDecomposition, k: usize, opts: &VerifyOptions) -> VerificationReport {
    let axioms = check_axioms(g, td);
    if td.vertex_count() != g.vertex_count() {
        let skipped = || CheckOutcome::Skipped { reason: "vertex count mismatch".into() };
        return VerificationReport {
            k,
            axioms,
            compactness: skipped(),
            adhesion: skipped(),
            unbreakability: skipped(),
        };
    }
    VerificationReport {
        k,
        axioms,
        compactness: check_compactness(g, td),
        adhesion: check_adhesion(td, k),
        unbreakability: if g.vertex_count() > opts.unbreakability_limit {
            CheckOutcome::Skipped {
                reason: format!(
                    "{} vertices exceeds the exhaustive limit {}",
                    g.vertex_count(),
                    opts.unbreakability_limit
                ),
            }
        } else {
            check_unbreakability(g, td, k)
        },
    }
}

pub(crate) fn check_axioms(g: &Graph, td: &RootedDecomposition) -> CheckOutcome {
    use CheckOutcome::{Failed, Passed};
    let n = g.vertex_count();
    if td.vertex_count() != n {
        return Failed(Counterexample::VertexCountMismatch { expected: n, found: td.vertex_count() });
    }
    if td.node_count() > n + 1 {
        return Failed(Counterexample::TooManyNodes { nodes: td.node_count(), limit: n + 1 });
    }
    let covered = td.bags().iter().fold(VertexSet::empty(), |acc, &b| acc | b);
    if let Some(v) = (g.all_vertices() - covered).min() {
        return Failed(Counterexample::UncoveredVertex { vertex: v });
    }
    for &(u, v) in g.edges() {
        if !td.bags().iter().any(|b| b.contains(u) && b.contains(v)) {
            return Failed(Counterexample::UncoveredEdge { u, v });
        }
    }
    // In a rooted tree, the nodes holding v are connected exactly when one of
    // them has a parent that does not hold v (or is the root).
    for v in g.vertices() {
        let tops = (0..td.node_count())
            .filter(|&t| td.bag(t).contains(v))
            .filter(|&t| td.parent(t).is_none_or(|p| !td.bag(p).contains(v)))
            .count();
        if tops != 1 {
            return Failed(Counterexample::ScatteredVertex { vertex: v });
        }
    }
    Passed
}

fn check_compactness(g: &Graph, td: &RootedDecomposition) -> CheckOutcome {
    let cones = td.cones();
    for (t, &cone) in cones.iter().enumerate() {
        if t == td.root() {
            continue;
        }
        let adhesion = td.adhesion(t);
        let interior = cone - adhesion;
        if interior.is_empty() {
            return CheckOutcome::Failed(Counterexample::EmptyInterior { node: t });
        }
        if !g.is_connected_within(interior) {
            return CheckOutcome::Failed(Counterexample::DisconnectedInterior { node: t });
        }
        let neighborhood = g.open_neighborhood(interior);
        if neighborhood != adhesion {
            return CheckOutcome::Failed(Counterexample::NeighborhoodMismatch { node: t, adhesion, neighborhood });
        }
    }
    CheckOutcome::Passed
}

fn check_adhesion(td: &RootedDecomposition, k: usize) -> CheckOutcome {
    match (0..td.node_count()).find(|&t| td.adhesion(t).len() > k) {
        Some(t) => CheckOutcome::Failed(Counterexample::AdhesionTooLarge { node: t, size: td.adhesion(t).len() }),
        None => CheckOutcome::Passed,
    }
}

fn check_unbreakability(g: &Graph, td: &RootedDecomposition, k: usize) -> CheckOutcome {
    let all = g.all_vertices();
    let mut found = None;
    let _ = for_each_small_cut(g, k, |a, cut_size| {
        let b = all - a;
        for (t, &bag) in td.bags().iter().enumerate() {
            if (bag & a).len() > k && (bag & b).len() > k {
                found = Some(Counterexample::BreakableBag { node: t, side_a: a, cut_size });
                return ControlFlow::Break(());
            }
        }
        ControlFlow::Continue(())
    });
    found.map_or(CheckOutcome::Passed, CheckOutcome::Failed)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(vs: &[Vertex]) -> VertexSet {
        vs.iter().copied().collect()
    }

    fn path3() -> Graph {
        Graph::new(3, [(0, 1), (1, 2)]).unwrap()
    }

    #[test]
    fn path_decomposition_passes() {
        let td = RootedDecomposition::new(3, vec![None, Some(0)], vec![set(&[0, 1]), set(&[1, 2])]).unwrap();
        let report = verify(&path3(), &td, 1);
        assert!(report.passed(), "{report:?}");
    }

    #[test]
    fn reports_uncovered_edge() {
        let td = RootedDecomposition::new(3, vec![None, Some(0)], vec![set(&[0, 1]), set(&[2])]).unwrap();
        assert_eq!(verify(&path3(), &td, 1).axioms, CheckOutcome::Failed(Counterexample::UncoveredEdge { u: 1, v: 2 }));
    }

    #[test]
    fn reports_scattered_vertex() {
        let td =
            RootedDecomposition::new(3, vec![None, Some(0), Some(1)], vec![set(&[0, 1]), set(&[1, 2]), set(&[0, 2])])
                .unwrap();
        assert_eq!(check_axioms(&path3(), &td), CheckOutcome::Failed(Counterexample::ScatteredVertex { vertex: 0 }));
    }

    #[test]
    fn reports_non_compact_node() {
        // child bag {0,1,2} ∩ root {0,1} = {0,1}, but N({2}) = {1}
        let td = RootedDecomposition::new(3, vec![None, Some(0)], vec![set(&[0, 1]), set(&[0, 1, 2])]).unwrap();
        let report = verify(&path3(), &td, 2);
        assert!(report.axioms == CheckOutcome::Passed);
        assert!(matches!(
            report.compactness,
            CheckOutcome::Failed(Counterexample::NeighborhoodMismatch { node: 1, .. })
        ));
        assert!(!report.passed());
    }

    #[test]
    fn reports_large_adhesion() {
        let td = RootedDecomposition::new(3, vec![None, Some(0)], vec![set(&[0, 1]), set(&[1, 2])]).unwrap();
        assert_eq!(
            verify(&path3(), &td, 0).adhesion,
            CheckOutcome::Failed(Counterexample::AdhesionTooLarge { node: 1, size: 1 })
        );
    }

    #[test]
    fn reports_breakable_bag() {
        // two triangles joined by a bridge, all in one bag
        let g = Graph::new(6, [(0, 1), (0, 2), (1, 2), (3, 4), (3, 5), (4, 5), (2, 3)]).unwrap();
        let td = RootedDecomposition::single_bag(&g).unwrap();
        let report = verify(&g, &td, 2);
        assert!(matches!(
            report.unbreakability,
            CheckOutcome::Failed(Counterexample::BreakableBag { node: 0, cut_size: 1, .. })
        ));
        let report = verify_with(&g, &td, 2, &VerifyOptions { unbreakability_limit: 4 });
        assert!(matches!(report.unbreakability, CheckOutcome::Skipped { .. }));
    }

    #[test]
    fn vertex_count_mismatch_skips_the_rest() {
        let td = RootedDecomposition::new(4, vec![None], vec![set(&[0, 1, 2, 3])]).unwrap();
        let report = verify(&path3(), &td, 1);
        assert!(report.axioms.is_failed());
        assert!(matches!(report.compactness, CheckOutcome::Skipped { .. }));
    }
}
