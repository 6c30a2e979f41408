//! Property tests over randomly generated graphs.

use mcg::alternating::{
    exists_alternating_cycle, symmetric_difference_components, ComponentKind,
};
use mcg::connectivity::{is_bipartite, vertex_connectivity};
use mcg::graph::{contract_shore, Graph, Shore, VertexSet};
use mcg::graph6::{parse_graph6, to_graph6};
use mcg::iso::are_isomorphic;
use mcg::matching::{count_perfect_matchings, count_pm_containing, find_pm_on, perfect_matchings};
use mcg::structure::{find_nontrivial_tight_cut, is_brick, is_matching_covered};
use proptest::prelude::*;

fn graph_on(n: usize, edge_weight: f64) -> impl Strategy<Value = Graph> {
    let bits = n * n.saturating_sub(1) / 2;
    proptest::collection::vec(prop::bool::weighted(edge_weight), bits).prop_map(move |flags| {
        let mut edges = Vec::new();
        let mut k = 0;
        for v in 1..n {
            for u in 0..v {
                if flags[k] {
                    edges.push((u, v));
                }
                k += 1;
            }
        }
        Graph::from_edges(n, &edges).unwrap()
    })
}

fn arb_graph(max_order: usize) -> impl Strategy<Value = Graph> {
    (0..=max_order).prop_flat_map(|n| graph_on(n, 0.5))
}

fn arb_dense_graph(min_order: usize, max_order: usize) -> impl Strategy<Value = Graph> {
    (min_order..=max_order).prop_flat_map(|n| graph_on(n, 0.8))
}

proptest! {
    #[test]
    fn graph6_round_trip(g in arb_graph(12)) {
        let encoded = to_graph6(&g);
        let back = parse_graph6(&encoded).unwrap();
        prop_assert_eq!(&g, &back);
    }

    #[test]
    fn contraction_orders_sum_to_n_plus_2(
        g in arb_graph(10),
        shore_bits in any::<u32>(),
    ) {
        prop_assume!(g.n() >= 3);
        let set = VertexSet(shore_bits).intersection(g.vertex_set());
        prop_assume!(!set.is_empty() && set.len() < g.n());
        let shore = Shore::new(&g, set).unwrap();
        let complement = Shore::new(&g, set.complement(g.n())).unwrap();
        let a = contract_shore(&g, shore).unwrap();
        let b = contract_shore(&g, complement).unwrap();
        prop_assert_eq!(a.n() + b.n(), g.n() + 2);
    }

    #[test]
    fn connectivity_bounded_by_min_degree(g in arb_graph(9)) {
        prop_assume!(g.n() >= 2);
        prop_assert!(vertex_connectivity(&g) <= g.min_degree());
    }

    #[test]
    fn isomorphism_is_reflexive_and_relabel_invariant(
        g in arb_graph(9),
        seed in any::<u64>(),
    ) {
        prop_assert!(are_isomorphic(&g, &g));
        let n = g.n();
        prop_assume!(n >= 1);
        // Cheap deterministic permutation driven by the seed.
        let mut perm: Vec<usize> = (0..n).collect();
        let mut state = seed;
        for i in (1..n).rev() {
            state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            let j = (state >> 33) as usize % (i + 1);
            perm.swap(i, j);
        }
        let edges: Vec<(usize, usize)> = g
            .edges()
            .iter()
            .map(|e| (perm[e.u()], perm[e.v()]))
            .collect();
        let h = Graph::from_edges(n, &edges).unwrap();
        prop_assert!(are_isomorphic(&g, &h));
    }

    #[test]
    fn pm_containment_sum_identity(g in arb_graph(8)) {
        let p = count_perfect_matchings(&g);
        let total: u64 = g
            .edges()
            .into_iter()
            .map(|e| count_pm_containing(&g, e).unwrap())
            .sum();
        prop_assert_eq!(total, p * (g.n() as u64) / 2);
    }

    #[test]
    fn containment_count_agrees_with_enumeration_filter(g in arb_graph(8)) {
        // Counting by deletion mask must agree with filtering the full
        // enumeration, edge by edge.
        let pms: Vec<_> = perfect_matchings(&g).collect();
        for e in g.edges() {
            let by_mask = count_pm_containing(&g, e).unwrap();
            let by_filter = pms.iter().filter(|m| m.contains_edge(e)).count() as u64;
            prop_assert_eq!(by_mask, by_filter);
        }
    }

    #[test]
    fn unique_pm_iff_no_alternating_cycle(g in arb_graph(9)) {
        let count = count_perfect_matchings(&g);
        prop_assume!(count >= 1 && g.n() >= 2);
        let m = perfect_matchings(&g).next().unwrap();
        prop_assert_eq!(exists_alternating_cycle(&g, &m), count > 1);
    }

    #[test]
    fn enumeration_matches_counter_and_is_perfect(g in arb_graph(8)) {
        let mut total = 0u64;
        for m in perfect_matchings(&g) {
            prop_assert!(m.is_perfect());
            total += 1;
        }
        prop_assert_eq!(total, count_perfect_matchings(&g));
    }

    #[test]
    fn elp_brick_characterization(g in arb_graph(8)) {
        // Both sides of the brick definition: the deletion characterization
        // against matching covered + nonbipartite + no nontrivial tight cut.
        let structural = is_matching_covered(&g)
            && !is_bipartite(&g)
            && find_nontrivial_tight_cut(&g).is_none();
        prop_assert_eq!(is_brick(&g), structural);
    }

    #[test]
    fn deletion_pm_symmetric_difference_shape(
        g in arb_dense_graph(6, 9),
        picks in any::<(u32, u32, u32)>(),
    ) {
        let n = g.n();
        let u = picks.0 as usize % n;
        let a = picks.1 as usize % n;
        let b = picks.2 as usize % n;
        prop_assume!(u != a && u != b && a != b);
        let full = g.vertex_set();
        let m1 = find_pm_on(&g, full.without(u).without(a));
        let m2 = find_pm_on(&g, full.without(u).without(b));
        prop_assume!(m1.is_some() && m2.is_some());
        let comps = symmetric_difference_components(&m1.unwrap(), &m2.unwrap()).unwrap();
        let mut path_ends = Vec::new();
        for c in &comps {
            match c.kind {
                ComponentKind::Path => {
                    prop_assert!(c.is_even());
                    path_ends.push(c.ends().unwrap());
                }
                ComponentKind::Cycle => prop_assert!(c.is_even()),
            }
        }
        prop_assert_eq!(path_ends.len(), 1, "exactly one path component");
        let (x, y) = path_ends[0];
        prop_assert_eq!((x.min(y), x.max(y)), (a.min(b), a.max(b)));
    }
}
