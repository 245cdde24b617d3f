//! Reference coarsening strategies that make no structural claims.
//!
//! These exist for scale and runtime comparisons. Their groups are tagged
//! [`PartitionKind::Arbitrary`] (or `Singleton` when size one), which the
//! structural certification deliberately skips while the disjoint-cover
//! checks still apply. Further strategies can be plugged in by producing a
//! [`PartitionSet`] and calling [`coarsen_by_partition`].

use alloc::vec::Vec;

use crate::coarsen::{coarsen_by_partition, CoarsenedGraph};
use crate::graph::{Graph, NodeId};
use crate::partition::{Partition, PartitionKind, PartitionSet};

/// SplitMix64: the 64-bit splittable generator of Steele, Lea and Flood.
///
/// Constants are pinned so seeded runs reproduce across platforms and
/// implementations: the state advances by the golden-ratio increment
/// `0x9E3779B97F4A7C15` and the output mixes with the multipliers
/// `0xBF58476D1CE4E5B9` and `0x94D049BB133111EB` (shifts 30/27/31).
#[derive(Debug, Clone)]
pub struct SplitMix64 {
    state: u64,
}

impl SplitMix64 {
    pub fn new(seed: u64) -> Self {
        SplitMix64 { state: seed }
    }

    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(0x9E37_79B9_7F4A_7C15);
        let mut z = self.state;
        z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
        z ^ (z >> 31)
    }

    /// Uniform-ish draw in `0..bound` by the widening-multiply reduction;
    /// bias is negligible for the bounds used here and the mapping is fixed,
    /// which is what reproducibility needs.
    pub fn next_below(&mut self, bound: usize) -> usize {
        debug_assert!(bound > 0);
        (((self.next_u64() as u128) * (bound as u128)) >> 64) as usize
    }
}

/// Seeded random cover: up to `r` groups take turns drawing one node
/// uniformly from the unassigned pool until every node is assigned.
/// Deterministic for a fixed seed.
pub fn coarsen_random(g: &Graph, r: usize, seed: u64) -> (CoarsenedGraph, PartitionSet) {
    let n = g.num_nodes();
    let r_eff = r.max(1).min(n.max(1));
    let mut rng = SplitMix64::new(seed);
    let mut pool: Vec<NodeId> = (0..n as NodeId).collect();
    let mut groups: Vec<Vec<NodeId>> = alloc::vec![Vec::new(); r_eff];
    let mut turn = 0usize;
    while !pool.is_empty() {
        let idx = rng.next_below(pool.len());
        let node = pool.swap_remove(idx);
        groups[turn % r_eff].push(node);
        turn += 1;
    }
    let partitions = groups
        .into_iter()
        .filter(|m| !m.is_empty())
        .map(|mut members| {
            members.sort_unstable();
            let kind =
                if members.len() == 1 { PartitionKind::Singleton } else { PartitionKind::Arbitrary };
            Partition { members, kind }
        })
        .collect();
    let pset = PartitionSet::new(n, partitions).expect("round-robin draw covers all nodes");
    let coarse = coarsen_by_partition(g, &pset).expect("cover matches graph");
    (coarse, pset)
}

/// Greedy 1-hop agglomeration: visit nodes from high degree to low (ties by
/// ascending id) and group each unvisited node with its unvisited neighbors.
pub fn coarsen_neighbor(g: &Graph) -> (CoarsenedGraph, PartitionSet) {
    let n = g.num_nodes();
    let mut order: Vec<NodeId> = (0..n as NodeId).collect();
    order.sort_unstable_by_key(|&v| (core::cmp::Reverse(g.degree(v)), v));

    let mut visited = alloc::vec![false; n];
    let mut partitions = Vec::new();
    for &cur in &order {
        if visited[cur as usize] {
            continue;
        }
        visited[cur as usize] = true;
        let mut members = alloc::vec![cur];
        for &w in g.neighbors(cur) {
            if !visited[w as usize] {
                visited[w as usize] = true;
                members.push(w);
            }
        }
        members.sort_unstable();
        let kind =
            if members.len() == 1 { PartitionKind::Singleton } else { PartitionKind::Arbitrary };
        partitions.push(Partition { members, kind });
    }
    let pset = PartitionSet::new(n, partitions).expect("greedy pass covers all nodes");
    let coarse = coarsen_by_partition(g, &pset).expect("cover matches graph");
    (coarse, pset)
}
