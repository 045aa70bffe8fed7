mod common;

use common::*;
use dcut_core::decomposition::construct;
use dcut_core::dp::enumerated_sides;
use dcut_core::generate::random_corpus;
use dcut_core::graph::VertexSet;
use dcut_core::{
    solve, Cost, DpOptions, DpRun, FamilyMode, Graph, MinBetaMode, RootedDecomposition, SolveError, SolveOptions,
    VertexMultiset,
};

fn set(vs: &[usize]) -> VertexSet {
    vs.iter().copied().collect()
}

fn two_node(g: &Graph, root: &[usize], child: &[usize]) -> RootedDecomposition {
    RootedDecomposition::new(g.vertex_count(), vec![None, Some(0)], vec![set(root), set(child)]).unwrap()
}

#[test]
fn bag_side_costs_match_brute_force() {
    // mcs(t, A_s, P) is the fewest edges of G_t crossed by a partition with
    // A ∩ β(t) = A_s that respects the caps, whenever that number is <= k.
    let mut finite = 0;
    for g in random_corpus(40, CORPUS_SEED + 1) {
        for d in 1..=2 {
            for k in (d + 1).max(2)..=4 {
                let td = construct(&g, k).unwrap();
                let run = DpRun::run(&g, &td, k, d, &DpOptions::default()).unwrap();
                for t in 0..td.node_count() {
                    for side in enumerated_sides(run.node(t), k) {
                        for p in run.store().table(t).candidates() {
                            let mcs = run.mcs(t, side, p).unwrap().value();
                            let brute = brute_force_side(&run, t, side, p).filter(|&b| b <= k);
                            assert_eq!(mcs, brute, "node {t} side {side:?} P {p:?}");
                            finite += usize::from(mcs.is_some());
                        }
                    }
                }
            }
        }
    }
    assert!(finite > 1000, "only {finite} finite entries");
}

#[test]
fn weak_families_only_raise_entries() {
    for g in random_corpus(60, CORPUS_SEED + 2) {
        for (d, k) in [(1, 2), (1, 3), (2, 3)] {
            let td = construct(&g, k).unwrap();
            let exact = DpRun::run(&g, &td, k, d, &DpOptions::default()).unwrap();
            for rounds in [0, 2] {
                let opts = DpOptions {
                    min_beta: MinBetaMode::ColorCode,
                    family: FamilyMode::Randomized { seed: 5, rounds: Some(rounds) },
                    ..DpOptions::default()
                };
                let weak = DpRun::run(&g, &td, k, d, &opts).unwrap();
                for (a, b) in exact.store().tables().iter().zip(weak.store().tables()) {
                    for s in 0..a.side_count() {
                        for p in 0..a.candidates().len() {
                            assert!(b.value(s, p) >= a.value(s, p));
                        }
                    }
                }
            }
        }
    }
}

#[test]
fn min_c_takes_the_cheapest_child_entry() {
    // 0 - 1, and a triangle 1 2 3 hanging below vertex 1
    let g = Graph::new(4, [(0, 1), (1, 2), (1, 3), (2, 3)]).unwrap();
    let td = two_node(&g, &[0, 1], &[1, 2, 3]);
    let run = DpRun::run(&g, &td, 3, 2, &DpOptions::default()).unwrap();
    let child = run.store().table(1);
    let one = VertexMultiset::from_counts([(1, 1)]);
    assert_eq!(run.store().lookup(1, VertexSet::empty(), &VertexMultiset::new(), 1), Some(Cost::INF));
    assert_eq!(child.value(0, child.candidate_index(&one).unwrap()).value(), Some(2));
    assert_eq!(run.min_c(0, 0).value(), Some(2));
    assert!(run.min_c(1, 0).is_inf());
    assert_eq!(run.root_value().value(), Some(1));
}

#[test]
fn mcs_examples() {
    let two_edges = Graph::new(4, [(0, 1), (2, 3)]).unwrap();
    let td = RootedDecomposition::single_bag(&two_edges).unwrap();
    let run = DpRun::run(&two_edges, &td, 2, 1, &DpOptions::default()).unwrap();
    let empty = VertexMultiset::new();
    assert_eq!(run.mcs(0, set(&[0, 1]), &empty).unwrap(), Cost::ZERO);
    assert_eq!(run.mcs(0, set(&[0]), &empty).unwrap().value(), Some(1));
    assert!(run.mcs(0, set(&[0, 1, 2]), &empty).is_err());

    let star = Graph::new(4, [(0, 1), (0, 2), (0, 3)]).unwrap();
    let td = RootedDecomposition::single_bag(&star).unwrap();
    let run = DpRun::run(&star, &td, 2, 1, &DpOptions::default()).unwrap();
    assert!(run.mcs(0, set(&[0]), &empty).unwrap().is_inf());
    assert!(run.stats().pruned_sides > 0);
}

#[test]
fn single_edge_root_value() {
    // A budget of one edge is below what a broken bag edge needs (its
    // candidate set has two elements), so this runs with k = 2.
    let g = p2();
    let td = RootedDecomposition::single_bag(&g).unwrap();
    let run = DpRun::run(&g, &td, 2, 1, &DpOptions::default()).unwrap();
    assert_eq!(run.root_value().value(), Some(1));
    assert!(DpRun::run(&g, &td, 1, 1, &DpOptions::default()).is_err());
}

#[test]
fn supplied_decompositions_are_verified() {
    let g = c4();
    let split = RootedDecomposition::new(4, vec![None, Some(0)], vec![set(&[0, 1, 2]), set(&[2, 3, 0])]).unwrap();
    let opts = SolveOptions { decomposition: Some(split), ..SolveOptions::default() };
    let out = solve(&g, 2, 1, &opts).unwrap();
    assert!(out.answer);
    assert_eq!(out.decomposition.unwrap().node_count(), 2);

    let single = RootedDecomposition::new(4, vec![None], vec![set(&[0, 1, 2, 3])]).unwrap();
    let path = Graph::new(4, [(0, 1), (1, 2), (2, 3)]).unwrap();
    let ok = SolveOptions { decomposition: Some(single), ..SolveOptions::default() };
    assert!(solve(&path, 2, 1, &ok).unwrap().answer);

    let uncovered = RootedDecomposition::new(4, vec![None, Some(0)], vec![set(&[0, 1]), set(&[1, 2, 3])]).unwrap();
    let opts = SolveOptions { decomposition: Some(uncovered), ..SolveOptions::default() };
    assert!(matches!(solve(&c4(), 2, 1, &opts), Err(SolveError::InvalidDecomposition(_))));
}

#[test]
fn witnesses_are_deterministic() {
    for g in random_corpus(30, CORPUS_SEED + 3) {
        let a = solve(&g, 4, 1, &SolveOptions::default()).unwrap();
        let b = solve(&g, 4, 1, &SolveOptions::default()).unwrap();
        assert_eq!(a.witness, b.witness);
        assert_eq!(a.dp_stats, b.dp_stats);
    }
}
