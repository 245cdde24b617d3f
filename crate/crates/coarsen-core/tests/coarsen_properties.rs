//! Structural laws of the reduction kernel.

use coarsen_core::features;
use coarsen_core::graph::Graph;
use coarsen_core::partition::{Partition, PartitionKind, PartitionSet};
use coarsen_core::{coarsen_by_partition, oracle};
use proptest::prelude::*;

fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        let pairs: Vec<(u32, u32)> = (0..n as u32)
            .flat_map(|u| ((u + 1)..n as u32).map(move |v| (u, v)))
            .collect();
        let upper = pairs.len();
        proptest::sample::subsequence(pairs, 0..=upper)
            .prop_map(move |chosen| Graph::from_edge_list(n, &chosen).unwrap())
    })
}

fn arb_cover(n: usize) -> impl Strategy<Value = PartitionSet> {
    prop::collection::vec(0..n, n).prop_map(move |assign| {
        let mut groups: Vec<Vec<u32>> = vec![Vec::new(); n];
        for (node, &grp) in assign.iter().enumerate() {
            groups[grp].push(node as u32);
        }
        let partitions: Vec<Partition> = groups
            .into_iter()
            .filter(|g| !g.is_empty())
            .map(|members| {
                let kind = if members.len() == 1 {
                    PartitionKind::Singleton
                } else {
                    PartitionKind::Arbitrary
                };
                Partition { members, kind }
            })
            .collect();
        PartitionSet::new(n, partitions).unwrap()
    })
}

proptest! {
    /// All-singleton cover reproduces the input graph and features.
    #[test]
    fn identity_partition_reproduces_input(g in arb_graph(20)) {
        let g = g.clone().with_features(features::degree_onehot(&g, 8)).unwrap();
        let c = coarsen_by_partition(&g, &PartitionSet::singletons(g.num_nodes())).unwrap();
        prop_assert_eq!(c.super_graph.edges(), g.edges());
        prop_assert_eq!(c.features.as_ref(), g.features());
        prop_assert!(c.diag_weights.iter().all(|&d| d == 0));
        if g.num_nodes() <= 8 {
            prop_assert!(oracle::isomorphic(&c.super_graph, &g).unwrap());
        }
    }

    /// Supernode adjacency is symmetric; each normalized row is the weighted
    /// row scaled by one factor; column sums of features are conserved; the
    /// coarse graph never has more edges than the source.
    #[test]
    fn kernel_laws((g, p) in arb_graph(24).prop_flat_map(|g| {
        let n = g.num_nodes();
        (Just(g), arb_cover(n))
    })) {
        let g = g.clone().with_features(features::degree_onehot(&g, 8)).unwrap();
        let c = coarsen_by_partition(&g, &p).unwrap();
        let n = c.num_supernodes();

        // symmetry of the simple coarse adjacency
        for &(i, j) in c.super_graph.edges() {
            prop_assert!(c.super_graph.has_edge(j, i));
        }

        // brute-force the weighted coarse matrix from scratch
        let map = p.mapping();
        let mut weighted = vec![vec![0u64; n]; n];
        for &(u, v) in g.edges() {
            let (a, b) = (map[u as usize] as usize, map[v as usize] as usize);
            weighted[a][b] += 1;
            weighted[b][a] += 1;
        }
        for i in 0..n {
            prop_assert_eq!(weighted[i][i], c.diag_weights[i]);
            let scale = if c.diag_weights[i] > 0 { 1.0 / c.diag_weights[i] as f64 } else { 1.0 };
            for j in 0..n {
                let expect = if i == j {
                    if c.diag_weights[i] > 0 { 1.0 } else { 0.0 }
                } else {
                    weighted[i][j] as f64 * scale
                };
                let got = c.normalized_adjacency.get(i, j);
                prop_assert!((got - expect).abs() < 1e-12, "entry ({}, {}): {} vs {}", i, j, got, expect);
            }
        }

        // feature conservation under summation
        let src_sums = g.features().unwrap().column_sums();
        let coarse_sums = c.features.as_ref().unwrap().column_sums();
        for (a, b) in src_sums.iter().zip(&coarse_sums) {
            prop_assert!((a - b).abs() < 1e-9);
        }

        // edge monotonicity
        prop_assert!(c.super_graph.num_edges() <= g.num_edges());
    }
}
