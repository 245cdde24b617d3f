//! Constrained loop-and-clique coarsening.
//!
//! The pass is hierarchical and greedy: nodes are visited from high degree
//! to low, each unconsumed node becomes the center of a search that collects
//! disjoint cliques inside the center's `sigma`-hop ball, and a bounded
//! simple-cycle pass picks up loops when the clique pass comes back (nearly)
//! empty. Uncovered nodes stay as singletons. Every choice is tie-broken
//! deterministically, so identical inputs produce identical partitions.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::vec::Vec;
use core::fmt;

use crate::coarsen::{coarsen_by_partition, CoarsenedGraph};
use crate::graph::{Graph, NodeId};
use crate::oracle::{self, SizeLimitError};
use crate::partition::{Partition, PartitionKind, PartitionSet};

/// Knobs of the coarsening pass; valid by construction.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LccConfig {
    delta: usize,
    sigma: usize,
    loop_fallback_threshold: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub enum LccConfigError {
    /// No loop shorter than 3 exists.
    DeltaTooSmall { delta: usize },
    /// The hierarchy must reach at least direct neighbors.
    SigmaZero,
    ThresholdOutOfRange { value: f64 },
}

impl fmt::Display for LccConfigError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LccConfigError::DeltaTooSmall { delta } => {
                write!(f, "loop length bound {delta} is below 3")
            }
            LccConfigError::SigmaZero => write!(f, "hierarchy depth must be at least 1"),
            LccConfigError::ThresholdOutOfRange { value } => {
                write!(f, "loop fallback threshold {value} not in [0, 1]")
            }
        }
    }
}

impl core::error::Error for LccConfigError {}

impl LccConfig {
    pub fn new(delta: usize, sigma: usize) -> Result<Self, LccConfigError> {
        if delta < 3 {
            return Err(LccConfigError::DeltaTooSmall { delta });
        }
        if sigma == 0 {
            return Err(LccConfigError::SigmaZero);
        }
        Ok(LccConfig { delta, sigma, loop_fallback_threshold: 0.0 })
    }

    /// Clique-coverage fraction at or below which the loop pass also runs.
    /// The default of 0 means loops are searched only when the clique pass
    /// found nothing at all.
    pub fn with_loop_fallback_threshold(mut self, value: f64) -> Result<Self, LccConfigError> {
        if !(0.0..=1.0).contains(&value) {
            return Err(LccConfigError::ThresholdOutOfRange { value });
        }
        self.loop_fallback_threshold = value;
        Ok(self)
    }

    /// Maximum loop length eligible for coarsening.
    pub fn delta(&self) -> usize {
        self.delta
    }

    /// Hop radius around the current central node.
    pub fn sigma(&self) -> usize {
        self.sigma
    }

    pub fn loop_fallback_threshold(&self) -> f64 {
        self.loop_fallback_threshold
    }
}

impl Default for LccConfig {
    fn default() -> Self {
        LccConfig { delta: 6, sigma: 1, loop_fallback_threshold: 0.0 }
    }
}

/// What the pass did, for debugging and reports.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LccTrace {
    /// Central nodes in processing order.
    pub visit_order: Vec<NodeId>,
    pub cliques_found: usize,
    pub loops_found: usize,
    pub fallback_taken: bool,
}

/// Nodes sorted from high degree to low, ties broken by ascending id.
/// Counting sort over degree buckets; ids land ascending within a bucket.
fn degree_order(g: &Graph) -> Vec<NodeId> {
    let n = g.num_nodes();
    let max_deg = (0..n as NodeId).map(|v| g.degree(v)).max().unwrap_or(0);
    let mut buckets: Vec<Vec<NodeId>> = alloc::vec![Vec::new(); max_deg + 1];
    for v in 0..n as NodeId {
        buckets[g.degree(v)].push(v);
    }
    let mut order = Vec::with_capacity(n);
    for bucket in buckets.iter().rev() {
        order.extend_from_slice(bucket);
    }
    order
}

/// Greedy clique pass under the hierarchy-depth constraint.
///
/// Returns the disjoint cliques (each of size >= 3; pairs are plain edges,
/// not structures), the per-node flag of clique membership, and the trace of
/// central nodes. From each central node the pass first grows a maximal
/// clique through the center itself, then seeds further cliques from the
/// still-unconsumed nodes of the center's ball; every emitted clique lies
/// entirely within that ball. A node spent as a seed without producing a
/// clique is not revisited.
pub fn find_cliques_hierarchical(
    g: &Graph,
    cfg: &LccConfig,
) -> (Vec<Partition>, Vec<bool>, LccTrace) {
    let n = g.num_nodes();
    let mut processed = alloc::vec![false; n];
    let mut covered = alloc::vec![false; n];
    let mut cliques: Vec<Partition> = Vec::new();
    let mut visit_order = Vec::new();

    // ball membership stamps and BFS queue, reused across centers
    let mut stamp = alloc::vec![NodeId::MAX; n];
    let mut ball: Vec<NodeId> = Vec::new();
    let mut queue: Vec<(NodeId, usize)> = Vec::new();

    for &center in &degree_order(g) {
        if processed[center as usize] {
            continue;
        }
        visit_order.push(center);

        // BFS ball of radius sigma; hop distance is a property of the full
        // graph, membership is restricted to unconsumed nodes
        ball.clear();
        queue.clear();
        queue.push((center, 0));
        stamp[center as usize] = center;
        let mut head = 0;
        while head < queue.len() {
            let (v, dist) = queue[head];
            head += 1;
            if !processed[v as usize] {
                ball.push(v);
            }
            if dist == cfg.sigma {
                continue;
            }
            for &w in g.neighbors(v) {
                if stamp[w as usize] != center {
                    stamp[w as usize] = center;
                    queue.push((w, dist + 1));
                }
            }
        }

        for idx in 0..ball.len() {
            let seed = ball[idx];
            if processed[seed as usize] {
                continue;
            }
            // grow greedily over the seed's unconsumed neighbors inside the
            // ball, ascending id, keeping pairwise adjacency
            let mut members = alloc::vec![seed];
            for &cand in g.neighbors(seed) {
                if processed[cand as usize] || stamp[cand as usize] != center {
                    continue;
                }
                if members.iter().all(|&m| g.has_edge(m, cand)) {
                    members.push(cand);
                }
            }
            if members.len() >= 3 {
                for &m in &members {
                    processed[m as usize] = true;
                    covered[m as usize] = true;
                }
                members.sort_unstable();
                cliques.push(Partition { members, kind: PartitionKind::Clique });
            } else {
                processed[seed as usize] = true;
            }
        }
    }

    let trace = LccTrace {
        visit_order,
        cliques_found: cliques.len(),
        loops_found: 0,
        fallback_taken: false,
    };
    (cliques, covered, trace)
}

/// Lowest id first, lexicographically smaller traversal direction.
fn canonical_loop(path: &[NodeId]) -> Vec<NodeId> {
    let mut reversed = Vec::with_capacity(path.len());
    reversed.push(path[0]);
    reversed.extend(path[1..].iter().rev());
    if path <= reversed.as_slice() {
        path.to_vec()
    } else {
        reversed
    }
}

/// Depth-bounded cycle pass over the nodes not claimed by cliques.
///
/// A DFS anchored at each unconsumed node (ascending id) walks paths of at
/// most `delta` nodes through ids larger than the anchor; closing back to
/// the anchor yields a simple cycle. Cycles are taken greedily in discovery
/// order: the first cycle found consumes its nodes and later cycles touching
/// them are skipped, which keeps the result disjoint. Anchoring at the
/// minimum id plus the canonical direction rules out rediscovering rotations
/// or reflections of an emitted loop.
pub fn find_loops_bounded(g: &Graph, cfg: &LccConfig, blocked: &[bool]) -> Vec<Partition> {
    let n = g.num_nodes();
    debug_assert_eq!(blocked.len(), n);
    let mut used = blocked.to_vec();
    let mut loops: Vec<Partition> = Vec::new();

    // peel to the 2-core of the unblocked subgraph first; nodes that lose
    // all but one neighbor can never sit on a cycle, and skipping them keeps
    // the path search from wandering into dead-end trees
    let mut live_deg: Vec<usize> = (0..n as NodeId)
        .map(|v| {
            if used[v as usize] {
                0
            } else {
                g.neighbors(v).iter().filter(|&&w| !used[w as usize]).count()
            }
        })
        .collect();
    let mut peel: Vec<NodeId> =
        (0..n as NodeId).filter(|&v| !used[v as usize] && live_deg[v as usize] < 2).collect();
    while let Some(v) = peel.pop() {
        used[v as usize] = true;
        for &w in g.neighbors(v) {
            if !used[w as usize] {
                live_deg[w as usize] -= 1;
                if live_deg[w as usize] == 1 {
                    peel.push(w);
                }
            }
        }
    }

    // TODO: Johnson-style blocked sets would bound the path search on dense
    // 2-cores; the peel above only removes tree parts.
    fn walk(
        g: &Graph,
        root: NodeId,
        path: &mut Vec<NodeId>,
        on_path: &mut Vec<bool>,
        used: &mut [bool],
        delta: usize,
    ) -> bool {
        let v = *path.last().unwrap();
        for &w in g.neighbors(v) {
            if used[w as usize] {
                continue;
            }
            if w == root && path.len() >= 3 {
                return true;
            }
            if w > root && !on_path[w as usize] && path.len() < delta {
                path.push(w);
                on_path[w as usize] = true;
                if walk(g, root, path, on_path, used, delta) {
                    return true;
                }
                on_path[w as usize] = false;
                path.pop();
            }
        }
        false
    }

    let mut on_path = alloc::vec![false; n];
    for root in 0..n as NodeId {
        if used[root as usize] {
            continue;
        }
        let mut path = alloc::vec![root];
        on_path[root as usize] = true;
        if walk(g, root, &mut path, &mut on_path, &mut used, cfg.delta) {
            for &m in &path {
                used[m as usize] = true;
            }
            loops.push(Partition { members: canonical_loop(&path), kind: PartitionKind::Loop });
        }
        for &m in &path {
            on_path[m as usize] = false;
        }
    }
    loops
}

/// Full coarsening pass: cliques, conditional loop fallback, singletons.
///
/// Deterministic: identical input and config produce identical output. The
/// partition order is cliques in discovery order, then loops in discovery
/// order, then singletons ascending.
pub fn coarsen_lcc(g: &Graph, cfg: &LccConfig) -> (CoarsenedGraph, PartitionSet, LccTrace) {
    let n = g.num_nodes();
    let (mut partitions, covered, mut trace) = find_cliques_hierarchical(g, cfg);

    let covered_count = covered.iter().filter(|&&c| c).count();
    let coverage = if n == 0 { 1.0 } else { covered_count as f64 / n as f64 };
    if n > 0 && coverage <= cfg.loop_fallback_threshold {
        let loops = find_loops_bounded(g, cfg, &covered);
        trace.loops_found = loops.len();
        trace.fallback_taken = true;
        partitions.extend(loops);
    }

    let mut in_partition = alloc::vec![false; n];
    for part in &partitions {
        for &m in &part.members {
            in_partition[m as usize] = true;
        }
    }
    for v in 0..n as NodeId {
        if !in_partition[v as usize] {
            partitions.push(Partition::singleton(v));
        }
    }

    let pset = PartitionSet::new(n, partitions).expect("pass emits a disjoint cover");
    let coarse = coarsen_by_partition(g, &pset).expect("cover matches graph");
    (coarse, pset, trace)
}

/// Exhaustive structure census for small graphs.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StructureCounts {
    /// Number of maximal cliques (any size).
    pub maximal_cliques: usize,
    /// Simple cycles of length `3..=delta`, counted edge-distinct.
    pub simple_cycles: usize,
    /// Edge-distinct cycle counts keyed by length.
    pub cycles_by_length: BTreeMap<usize, usize>,
    /// Distinct cycle vertex sets keyed by size; a K4 has three 4-cycles but
    /// one 4-node vertex set, and either count can be wanted.
    pub vertex_sets_by_length: BTreeMap<usize, usize>,
}

pub const DEFAULT_COUNT_CAP: usize = 64;

/// Counts all maximal cliques and all bounded simple cycles, non-disjointly.
/// Intended for tests and reports on small graphs; loop counts can be
/// exponential.
pub fn count_structures(g: &Graph, cfg: &LccConfig) -> Result<StructureCounts, SizeLimitError> {
    count_structures_capped(g, cfg, DEFAULT_COUNT_CAP)
}

pub fn count_structures_capped(
    g: &Graph,
    cfg: &LccConfig,
    node_cap: usize,
) -> Result<StructureCounts, SizeLimitError> {
    let cap = node_cap.min(oracle::NODE_CAP);
    if g.num_nodes() > cap {
        return Err(SizeLimitError { nodes: g.num_nodes(), cap });
    }
    let cliques = oracle::all_maximal_cliques(g)?;
    let cycles = oracle::all_simple_cycles_upto(g, cfg.delta)?;

    let mut cycles_by_length: BTreeMap<usize, usize> = BTreeMap::new();
    let mut vertex_sets: BTreeSet<Vec<NodeId>> = BTreeSet::new();
    for c in &cycles {
        *cycles_by_length.entry(c.len()).or_insert(0) += 1;
        let mut set = c.clone();
        set.sort_unstable();
        vertex_sets.insert(set);
    }
    let mut vertex_sets_by_length: BTreeMap<usize, usize> = BTreeMap::new();
    for s in &vertex_sets {
        *vertex_sets_by_length.entry(s.len()).or_insert(0) += 1;
    }

    Ok(StructureCounts {
        maximal_cliques: cliques.len(),
        simple_cycles: cycles.len(),
        cycles_by_length,
        vertex_sets_by_length,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn complete(n: usize) -> Graph {
        let mut edges = Vec::new();
        for u in 0..n as u32 {
            for v in (u + 1)..n as u32 {
                edges.push((u, v));
            }
        }
        Graph::from_edge_list(n, &edges).unwrap()
    }

    fn cycle_graph(n: usize) -> Graph {
        let edges: Vec<_> = (0..n as u32).map(|i| (i, (i + 1) % n as u32)).collect();
        Graph::from_edge_list(n, &edges).unwrap()
    }

    /// Center M with a clique {M, A1, A2}, node B two hops from M closing a
    /// second triangle {B, A1, A2}, and pendant leaves making M the highest
    /// degree node. With sigma = 1 only the clique through M is coarsened.
    fn two_hop_fixture() -> Graph {
        // 0 = M, 1 = A1, 2 = A2, 3 = B, 4..6 pendant leaves of M
        Graph::from_edge_list(
            7,
            &[(0, 1), (0, 2), (1, 2), (1, 3), (2, 3), (0, 4), (0, 5), (0, 6)],
        )
        .unwrap()
    }

    #[test]
    fn hierarchy_depth_blocks_two_hop_clique() {
        let g = two_hop_fixture();
        let cfg = LccConfig::default();
        let (cliques, covered, trace) = find_cliques_hierarchical(&g, &cfg);
        assert_eq!(cliques.len(), 1);
        assert_eq!(cliques[0].members, vec![0, 1, 2]);
        assert_eq!(trace.visit_order[0], 0);
        // B stays unconsumed by cliques and ends as a singleton downstream
        assert!(!covered[3]);
        let (_, pset, _) = coarsen_lcc(&g, &cfg);
        let b_group: Vec<_> = pset
            .partitions()
            .iter()
            .filter(|p| p.members.contains(&3))
            .collect();
        assert_eq!(b_group.len(), 1);
        assert_eq!(b_group[0].members, vec![3]);
        assert_eq!(b_group[0].kind, PartitionKind::Singleton);
    }

    #[test]
    fn k4_is_a_single_partition() {
        let g = complete(4);
        let cfg = LccConfig::default();
        let (cliques, _, _) = find_cliques_hierarchical(&g, &cfg);
        assert_eq!(cliques.len(), 1);
        assert_eq!(cliques[0].members, vec![0, 1, 2, 3]);
        // agreement with the exhaustive enumeration
        assert_eq!(
            oracle::all_maximal_cliques(&g).unwrap(),
            vec![vec![0, 1, 2, 3]]
        );
        let (coarse, _, _) = coarsen_lcc(&g, &cfg);
        assert_eq!(coarse.num_supernodes(), 1);
        assert_eq!(coarse.super_graph.num_edges(), 0);
    }

    #[test]
    fn triangle_free_graph_yields_no_cliques() {
        let g = Graph::from_edge_list(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        let (cliques, covered, _) = find_cliques_hierarchical(&g, &LccConfig::default());
        assert!(cliques.is_empty());
        assert!(covered.iter().all(|&c| !c));
    }

    #[test]
    fn hexagon_is_one_loop_heptagon_is_none() {
        let cfg = LccConfig::default();
        let c6 = cycle_graph(6);
        let loops = find_loops_bounded(&c6, &cfg, &alloc::vec![false; 6]);
        assert_eq!(loops.len(), 1);
        assert_eq!(loops[0].members, vec![0, 1, 2, 3, 4, 5]);
        assert_eq!(loops[0].kind, PartitionKind::Loop);

        let c7 = cycle_graph(7);
        assert!(find_loops_bounded(&c7, &cfg, &alloc::vec![false; 7]).is_empty());
    }

    /// Two 3-loops joined by a 4-loop; with delta = 3 only the triangles
    /// qualify.
    #[test]
    fn length_bound_selects_only_short_loops() {
        // triangle {0,1,2}, triangle {3,4,5}, and 4-cycle 1-2-3-4
        let g = Graph::from_edge_list(
            6,
            &[(0, 1), (0, 2), (1, 2), (3, 4), (3, 5), (4, 5), (2, 3), (1, 4)],
        )
        .unwrap();
        let cfg = LccConfig::new(3, 1).unwrap();
        let loops = find_loops_bounded(&g, &cfg, &alloc::vec![false; 6]);
        assert_eq!(loops.len(), 2);
        assert_eq!(loops[0].members, vec![0, 1, 2]);
        assert_eq!(loops[1].members, vec![3, 4, 5]);
    }

    #[test]
    fn blocked_nodes_are_excluded_from_loops() {
        let c6 = cycle_graph(6);
        let mut blocked = alloc::vec![false; 6];
        blocked[2] = true;
        assert!(find_loops_bounded(&c6, &LccConfig::default(), &blocked).is_empty());
    }

    #[test]
    fn shared_node_triangles_tie_break() {
        // two triangles sharing node 2; the pass keeps exactly one triangle
        // and the leftovers become singletons
        let g = Graph::from_edge_list(5, &[(0, 1), (0, 2), (1, 2), (2, 3), (2, 4), (3, 4)]).unwrap();
        let (coarse, pset, trace) = coarsen_lcc(&g, &LccConfig::default());
        let non_singleton: Vec<_> =
            pset.partitions().iter().filter(|p| p.members.len() > 1).collect();
        assert_eq!(non_singleton.len(), 1);
        // either triangle is a valid outcome; the documented tie-break
        // (degree desc, id asc; neighbors scanned ascending) fixes {0,1,2}
        assert_eq!(non_singleton[0].members, vec![0, 1, 2]);
        assert_eq!(trace.cliques_found, 1);
        assert_eq!(coarse.num_supernodes(), 3);

        // stability across runs
        let again = coarsen_lcc(&g, &LccConfig::default());
        assert_eq!(pset, again.1);
    }

    #[test]
    fn empty_graph_stays_identical() {
        let g = Graph::from_edge_list(5, &[]).unwrap();
        let (coarse, pset, trace) = coarsen_lcc(&g, &LccConfig::default());
        assert_eq!(pset.len(), 5);
        assert_eq!(coarse.num_supernodes(), 5);
        assert_eq!(coarse.super_graph.num_edges(), 0);
        assert!(trace.fallback_taken);
        assert_eq!(trace.loops_found, 0);
    }

    #[test]
    fn zero_node_graph() {
        let g = Graph::from_edge_list(0, &[]).unwrap();
        let (coarse, pset, _) = coarsen_lcc(&g, &LccConfig::default());
        assert_eq!(pset.len(), 0);
        assert_eq!(coarse.num_supernodes(), 0);
    }

    #[test]
    fn fallback_threshold_gates_loop_pass() {
        // triangle plus a square: the clique pass covers 3 of 7 nodes, so
        // with the default threshold the square is left alone
        let g = Graph::from_edge_list(
            7,
            &[(0, 1), (0, 2), (1, 2), (3, 4), (4, 5), (5, 6), (3, 6)],
        )
        .unwrap();
        let (_, pset, trace) = coarsen_lcc(&g, &LccConfig::default());
        assert!(!trace.fallback_taken);
        assert_eq!(pset.partitions().iter().filter(|p| p.members.len() > 1).count(), 1);

        let cfg = LccConfig::default().with_loop_fallback_threshold(0.5).unwrap();
        let (_, pset, trace) = coarsen_lcc(&g, &cfg);
        assert!(trace.fallback_taken);
        assert_eq!(trace.loops_found, 1);
        let kinds: Vec<_> = pset
            .partitions()
            .iter()
            .filter(|p| p.members.len() > 1)
            .map(|p| p.kind)
            .collect();
        assert_eq!(kinds, vec![PartitionKind::Clique, PartitionKind::Loop]);
    }

    #[test]
    fn k4_census_counts() {
        let cfg = LccConfig::new(4, 1).unwrap();
        let counts = count_structures(&complete(4), &cfg).unwrap();
        assert_eq!(counts.maximal_cliques, 1);
        assert_eq!(counts.cycles_by_length.get(&3), Some(&4));
        assert_eq!(counts.cycles_by_length.get(&4), Some(&3));
        assert_eq!(counts.simple_cycles, 7);
        // counted by vertex set instead, the three 4-cycles are one object
        assert_eq!(counts.vertex_sets_by_length.get(&4), Some(&1));
    }

    #[test]
    fn c5_census() {
        let counts = count_structures(&cycle_graph(5), &LccConfig::default()).unwrap();
        assert_eq!(counts.simple_cycles, 1);
        assert_eq!(counts.cycles_by_length.get(&5), Some(&1));
        // maximal cliques of C5 are its 5 edges; none has 3+ members
        assert_eq!(counts.maximal_cliques, 5);
    }

    #[test]
    fn census_respects_cap() {
        let g = Graph::from_edge_list(65, &[]).unwrap();
        assert!(count_structures(&g, &LccConfig::default()).is_err());
        let g = Graph::from_edge_list(10, &[]).unwrap();
        assert!(count_structures_capped(&g, &LccConfig::default(), 8).is_err());
    }

    #[test]
    fn config_validation() {
        assert!(LccConfig::new(2, 1).is_err());
        assert!(LccConfig::new(3, 0).is_err());
        assert!(LccConfig::new(3, 1).is_ok());
        assert!(LccConfig::default().with_loop_fallback_threshold(1.5).is_err());
    }
}
