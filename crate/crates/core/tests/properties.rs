mod common;

use proptest::prelude::*;

use common::*;
use dcut_core::decomposition::{construct, parse, serialize};
use dcut_core::family::{build_randomized, verify_covering, SetFamily};
use dcut_core::generate::gnm;
use dcut_core::graph::{edge_cut, global_min_cut_at_most, is_d_cut, is_d_matching, Bipartition, VertexSet};
use dcut_core::multiset::enumerate_d_matched;
use dcut_core::{brute_force_min_dcut, oracle_decide, Graph};

/// Connected graphs with `lo..=hi` vertices and up to twice as many edges.
fn connected_graph(lo: usize, hi: usize) -> impl Strategy<Value = Graph> {
    (lo..=hi, any::<u64>(), 0.0f64..1.0).prop_map(|(n, seed, density)| {
        let max_m = (2 * n).min(n * (n - 1) / 2);
        let m = n - 1 + ((max_m - (n - 1)) as f64 * density) as usize;
        gnm(n, m, true, seed).unwrap()
    })
}

fn any_graph(hi: usize) -> impl Strategy<Value = Graph> {
    (1..=hi, any::<u64>(), 0.0f64..1.0).prop_map(|(n, seed, density)| {
        let m = ((n * (n - 1) / 2) as f64 * density) as usize;
        gnm(n, m, false, seed).unwrap()
    })
}

fn brute_min_cut(g: &Graph) -> usize {
    let n = g.vertex_count();
    (1u64..(1 << (n - 1)))
        .map(|mask| g.edges().iter().filter(|&&(u, v)| (mask >> u & 1) != (mask >> v & 1)).count())
        .min()
        .unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn d_cut_is_a_cut_with_a_d_matching(g in any_graph(10), mask in any::<u64>(), d in 1usize..4) {
        let n = g.vertex_count();
        let side = VertexSet::from_bits(mask) & VertexSet::full(n);
        let p = Bipartition::from_set(n, side);
        let cut = edge_cut(&g, &p).unwrap();
        let expected = p.is_cut() && is_d_matching(&g, &cut, d).unwrap();
        prop_assert_eq!(is_d_cut(&g, &p, d).unwrap(), expected);
        prop_assert_eq!(edge_cut(&g, &p.swapped()).unwrap(), cut);
        if d >= g.max_degree() {
            prop_assert_eq!(is_d_cut(&g, &p, d).unwrap(), p.is_cut());
        }
    }

    #[test]
    fn min_cut_matches_brute_force(g in connected_graph(2, 12), k in 0usize..6) {
        prop_assert_eq!(global_min_cut_at_most(&g, k).unwrap(), brute_min_cut(&g) <= k);
    }

    #[test]
    fn oracle_is_monotone(g in any_graph(9)) {
        for d in 1..=3 {
            let r = brute_force_min_dcut(&g, d).unwrap();
            if let Some(cut) = &r.best_cut {
                prop_assert!(is_d_cut(&g, cut, d).unwrap());
                prop_assert_eq!(Some(edge_cut(&g, cut).unwrap().len()), r.min_dcut_size);
            }
            for k in 0..8 {
                let here = oracle_decide(&g, k, d).unwrap();
                prop_assert!(!here || oracle_decide(&g, k + 1, d).unwrap());
                prop_assert!(!here || oracle_decide(&g, k, d + 1).unwrap());
            }
        }
    }

    #[test]
    fn candidate_count_within_subset_bound(q in 0usize..5, d in 1usize..4, extra in 0usize..3) {
        let k = q + extra;
        let domain: Vec<usize> = (0..q).collect();
        let list = enumerate_d_matched(&domain, d, k).unwrap();
        prop_assert!(list.len() as u128 <= choose_up_to(q * d, k));
    }

    #[test]
    fn covering_is_monotone(size in 0usize..8, a in 0usize..3, b in 0usize..3, seed in any::<u64>()) {
        let family = build_randomized(VertexSet::full(size), a, b, seed);
        if verify_covering(&family, a, b).unwrap().is_none() {
            for a2 in 0..=a {
                for b2 in 0..=b {
                    prop_assert!(verify_covering(&family, a2, b2).unwrap().is_none());
                }
            }
        }
        let again = build_randomized(VertexSet::full(size), a, b, seed);
        prop_assert_eq!(family.members(), again.members());
    }

    #[test]
    fn constructed_decompositions_are_compact(g in connected_graph(2, 12), k in 0usize..5) {
        let td = construct(&g, k).unwrap();
        let cones = td.cones();
        for t in 0..td.node_count() {
            let sigma = td.adhesion(t);
            let alpha = cones[t] - sigma;
            if t != td.root() {
                prop_assert!(!alpha.is_empty());
                prop_assert!(g.is_connected_within(alpha));
                prop_assert_eq!(g.open_neighborhood(alpha), sigma);
            }
            // the children's local graphs and the bag part of G_t share no edge
            let bag = td.bag(t);
            let local = |cone: VertexSet, inner: VertexSet| -> Vec<(usize, usize)> {
                g.edges()
                    .iter()
                    .copied()
                    .filter(|&(u, v)| cone.contains(u) && cone.contains(v))
                    .filter(|&(u, v)| !(inner.contains(u) && inner.contains(v)))
                    .collect()
            };
            let mut seen: Vec<(usize, usize)> = local(bag, sigma);
            for &c in td.children(t) {
                for e in local(cones[c], td.adhesion(c)) {
                    prop_assert!(!seen.contains(&e), "edge {:?} in two local graphs", e);
                    seen.push(e);
                }
            }
        }
        prop_assert_eq!(parse(&serialize(&td)).unwrap(), td);
    }
}

#[test]
fn exhaustive_family_covers_everything() {
    for size in 0..=6 {
        let family = SetFamily::exhaustive(VertexSet::full(size)).unwrap();
        assert_eq!(family.len(), 1 << size);
        for a in 0..=size {
            for b in 0..=size {
                assert_eq!(verify_covering(&family, a, b).unwrap(), None);
            }
        }
    }
}

#[test]
fn nested_loop_counter_sanity() {
    assert_eq!(nested_loop_count(0, 3, 0), 1);
    assert_eq!(nested_loop_count(2, 2, 3), 8);
    assert_eq!(nested_loop_count(3, 1, 3), 8);
}
