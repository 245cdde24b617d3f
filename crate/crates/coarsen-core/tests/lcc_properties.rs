//! Every structure the coarsening pass emits must survive independent
//! certification, and the pass must be deterministic.

use coarsen_core::graph::Graph;
use coarsen_core::lcc::{coarsen_lcc, find_loops_bounded, LccConfig};
use coarsen_core::oracle;
use coarsen_core::partition::PartitionKind;
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

fn arb_config() -> impl Strategy<Value = LccConfig> {
    (3usize..=7, 1usize..=3, prop::bool::ANY).prop_map(|(delta, sigma, fallback)| {
        let cfg = LccConfig::new(delta, sigma).unwrap();
        if fallback {
            cfg.with_loop_fallback_threshold(0.5).unwrap()
        } else {
            cfg
        }
    })
}

proptest! {
    #[test]
    fn emitted_structures_certify((g, cfg) in (arb_graph(20), arb_config())) {
        let (coarse, pset, trace) = coarsen_lcc(&g, &cfg);

        let mut cliques = 0;
        let mut loops = 0;
        for part in pset.partitions() {
            let cert = oracle::certify_partition(&g, part, cfg.delta());
            prop_assert!(cert.valid, "{:?}: {:?}", part, cert.violation);
            match part.kind {
                PartitionKind::Clique => {
                    prop_assert!(part.members.len() >= 3);
                    cliques += 1;
                }
                PartitionKind::Loop => {
                    prop_assert!(part.members.len() >= 3 && part.members.len() <= cfg.delta());
                    loops += 1;
                }
                PartitionKind::Singleton => prop_assert_eq!(part.members.len(), 1),
                PartitionKind::Arbitrary => prop_assert!(false, "pass never emits arbitrary"),
            }
        }
        prop_assert_eq!(trace.cliques_found, cliques);
        prop_assert_eq!(trace.loops_found, loops);
        prop_assert_eq!(pset.source_nodes(), g.num_nodes());
        prop_assert_eq!(coarse.num_supernodes(), pset.len());
    }

    #[test]
    fn pass_is_deterministic((g, cfg) in (arb_graph(16), arb_config())) {
        let a = coarsen_lcc(&g, &cfg);
        let b = coarsen_lcc(&g, &cfg);
        prop_assert_eq!(a.0, b.0);
        prop_assert_eq!(a.1, b.1);
        prop_assert_eq!(a.2, b.2);
    }

    /// The bounded loop pass alone: disjoint, certified, within the bound,
    /// never touching blocked nodes.
    #[test]
    fn loop_pass_respects_bounds((g, delta) in (arb_graph(14), 3usize..=6)) {
        let cfg = LccConfig::new(delta, 1).unwrap();
        let n = g.num_nodes();
        let mut blocked = vec![false; n];
        for v in 0..n {
            if v % 3 == 0 {
                blocked[v] = true;
            }
        }
        let loops = find_loops_bounded(&g, &cfg, &blocked);
        let mut seen = vec![false; n];
        for part in &loops {
            prop_assert_eq!(part.kind, PartitionKind::Loop);
            prop_assert!(part.members.len() <= delta);
            let cert = oracle::certify_partition(&g, part, delta);
            prop_assert!(cert.valid, "{:?}", cert.violation);
            for &m in &part.members {
                prop_assert!(!blocked[m as usize]);
                prop_assert!(!seen[m as usize], "loops overlap at {}", m);
                seen[m as usize] = true;
            }
        }
    }
}
