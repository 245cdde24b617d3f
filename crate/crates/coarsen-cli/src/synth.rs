//! Seeded synthetic sparse graphs for the scaling harness.

use std::collections::HashSet;

use coarsen_core::baseline::SplitMix64;
use coarsen_core::graph::Graph;

/// Node-id bandwidth of the generated graphs. Real benchmark graphs number
/// their nodes along the structure (molecule atoms, protein chains), so the
/// scaling harness keeps endpoints close in id space too; a uniformly
/// shuffled id layout would benchmark DRAM latency rather than the
/// algorithm.
pub const BAND: usize = 32;

/// Random simple graph with exactly `num_edges` distinct edges, endpoints
/// at most [`BAND`] apart in id space (cyclically).
pub fn sparse_graph(num_nodes: usize, num_edges: usize, seed: u64) -> Graph {
    assert!(num_nodes >= 2 || num_edges == 0);
    let band = BAND.min(num_nodes.saturating_sub(1) / 2).max(1);
    let capacity = num_nodes * band;
    assert!(
        num_edges * 10 <= capacity * 9,
        "{num_edges} edges will not fit a bandwidth-{band} graph on {num_nodes} nodes"
    );
    let mut rng = SplitMix64::new(seed);
    let mut seen: HashSet<(u32, u32)> = HashSet::with_capacity(num_edges * 2);
    let mut edges = Vec::with_capacity(num_edges);
    while edges.len() < num_edges {
        let u = rng.next_below(num_nodes);
        let v = (u + 1 + rng.next_below(band)) % num_nodes;
        let key = ((u.min(v)) as u32, (u.max(v)) as u32);
        if seen.insert(key) {
            edges.push(key);
        }
    }
    Graph::from_edge_list(num_nodes, &edges).expect("sampled edges are valid")
}

/// Splits a `|V| + |E|` budget into nodes and edges at a fixed 1:4 ratio, so
/// graphs of different budgets share their average degree (8, comfortably
/// sparse but dense enough that every instance carries cliques).
pub fn size_for_budget(budget: usize) -> (usize, usize) {
    let num_nodes = (budget / 5).max(2);
    (num_nodes, budget - num_nodes)
}
