//! The sparse traversal route and the explicit matrix route must agree
//! field-for-field on arbitrary graphs and covers.

use coarsen_core::features;
use coarsen_core::graph::Graph;
use coarsen_core::partition::{Partition, PartitionKind, PartitionSet};
use coarsen_core::{coarsen_by_partition, matrix_route_coarsen};
use proptest::prelude::*;

/// Random simple graph on up to `max_n` nodes.
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

/// Random disjoint cover via a node -> group assignment vector.
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

fn arb_pair(max_n: usize) -> impl Strategy<Value = (Graph, PartitionSet, bool)> {
    (arb_graph(max_n), any::<bool>()).prop_flat_map(|(g, with_features)| {
        let n = g.num_nodes();
        (Just(g), arb_cover(n), Just(with_features))
    })
}

proptest! {
    #[test]
    fn routes_agree((g, p, with_features) in arb_pair(50)) {
        let g = if with_features {
            let f = features::degree_onehot(&g, 8);
            g.with_features(f).unwrap()
        } else {
            g
        };
        let direct = coarsen_by_partition(&g, &p).unwrap();
        let matrix = matrix_route_coarsen(&g, &p).unwrap();
        prop_assert_eq!(direct, matrix);
    }
}

#[test]
fn k3_single_block_agrees() {
    let g = Graph::from_edge_list(3, &[(0, 1), (1, 2), (0, 2)]).unwrap();
    let p = PartitionSet::new(
        3,
        vec![Partition { members: vec![0, 1, 2], kind: PartitionKind::Arbitrary }],
    )
    .unwrap();
    let a = coarsen_by_partition(&g, &p).unwrap();
    let b = matrix_route_coarsen(&g, &p).unwrap();
    assert_eq!(a, b);
    assert_eq!(a.diag_weights, vec![6]);
    assert_eq!(a.block_sizes, vec![3]);
}
