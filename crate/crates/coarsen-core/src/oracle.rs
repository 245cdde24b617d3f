//! Naive exhaustive reference implementations used to certify outputs.
//!
//! Everything here trades speed for obviousness and is capped at 64 nodes
//! (node sets become `u64` bitmasks). None of it shares code with the
//! production search paths it is used to check.

use alloc::collections::BTreeSet;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::graph::{Graph, NodeId};
use crate::partition::{Partition, PartitionKind};

/// Hard cap on exhaustive enumeration.
pub const NODE_CAP: usize = 64;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SizeLimitError {
    pub nodes: usize,
    pub cap: usize,
}

impl fmt::Display for SizeLimitError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "graph has {} nodes, exhaustive cap is {}", self.nodes, self.cap)
    }
}

impl core::error::Error for SizeLimitError {}

fn adjacency_masks(g: &Graph) -> Result<Vec<u64>, SizeLimitError> {
    let n = g.num_nodes();
    if n > NODE_CAP {
        return Err(SizeLimitError { nodes: n, cap: NODE_CAP });
    }
    let mut masks = alloc::vec![0u64; n];
    for &(u, v) in g.edges() {
        masks[u as usize] |= 1 << v;
        masks[v as usize] |= 1 << u;
    }
    Ok(masks)
}

fn bron_kerbosch(adj: &[u64], r: u64, mut p: u64, mut x: u64, out: &mut Vec<u64>) {
    if p == 0 && x == 0 {
        out.push(r);
        return;
    }
    // pivot on the candidate dominating the most of P
    let pivot = {
        let mut best = 0;
        let mut best_cover = u32::MAX;
        let mut pool = p | x;
        while pool != 0 {
            let v = pool.trailing_zeros() as usize;
            pool &= pool - 1;
            let cover = (p & !adj[v]).count_ones();
            if best_cover == u32::MAX || cover < best_cover {
                best_cover = cover;
                best = v;
            }
        }
        best
    };
    let mut cand = p & !adj[pivot];
    while cand != 0 {
        let v = cand.trailing_zeros() as usize;
        let bit = 1u64 << v;
        cand &= cand - 1;
        bron_kerbosch(adj, r | bit, p & adj[v], x & adj[v], out);
        p &= !bit;
        x |= bit;
    }
}

/// All maximal cliques (including isolated nodes and single edges), each
/// sorted ascending, the list sorted lexicographically.
pub fn all_maximal_cliques(g: &Graph) -> Result<Vec<Vec<NodeId>>, SizeLimitError> {
    let adj = adjacency_masks(g)?;
    let n = g.num_nodes();
    let mut raw = Vec::new();
    let full = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
    bron_kerbosch(&adj, 0, full, 0, &mut raw);
    let mut out: Vec<Vec<NodeId>> = raw
        .into_iter()
        .map(|mask| {
            let mut members = Vec::new();
            let mut m = mask;
            while m != 0 {
                members.push(m.trailing_zeros());
                m &= m - 1;
            }
            members
        })
        .collect();
    out.sort();
    Ok(out)
}

/// Canonical representation of a simple cycle given as a closed walk with
/// the minimum node in front: the lexicographically smaller of the two
/// traversal directions.
fn canonical_cycle(path: &[NodeId]) -> Vec<NodeId> {
    debug_assert!(path.iter().skip(1).all(|&v| v > path[0]));
    let forward = path.to_vec();
    let mut backward = Vec::with_capacity(path.len());
    backward.push(path[0]);
    backward.extend(path[1..].iter().rev());
    if forward <= backward {
        forward
    } else {
        backward
    }
}

/// Every simple cycle of length `3..=delta`, each exactly once in canonical
/// form, sorted.
pub fn all_simple_cycles_upto(g: &Graph, delta: usize) -> Result<Vec<Vec<NodeId>>, SizeLimitError> {
    let adj = adjacency_masks(g)?;
    let n = g.num_nodes();
    let mut seen: BTreeSet<Vec<NodeId>> = BTreeSet::new();

    // anchor every cycle at its minimum node so rotations collapse
    fn extend(
        adj: &[u64],
        root: NodeId,
        path: &mut Vec<NodeId>,
        on_path: u64,
        delta: usize,
        seen: &mut BTreeSet<Vec<NodeId>>,
    ) {
        let v = *path.last().unwrap();
        let mut nbrs = adj[v as usize];
        while nbrs != 0 {
            let w = nbrs.trailing_zeros();
            nbrs &= nbrs - 1;
            if w == root && path.len() >= 3 {
                seen.insert(canonical_cycle(path));
            }
            if w > root && on_path & (1 << w) == 0 && path.len() < delta {
                path.push(w);
                extend(adj, root, path, on_path | (1 << w), delta, seen);
                path.pop();
            }
        }
    }

    for root in 0..n as NodeId {
        let mut path = alloc::vec![root];
        extend(&adj, root, &mut path, 1 << root, delta, &mut seen);
    }
    Ok(seen.into_iter().collect())
}

/// Outcome of checking a partition's structural claim against the graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Certification {
    pub valid: bool,
    pub violation: Option<String>,
}

impl Certification {
    fn ok() -> Self {
        Certification { valid: true, violation: None }
    }

    fn fail(reason: String) -> Self {
        Certification { valid: false, violation: Some(reason) }
    }
}

/// Checks that a partition is what its kind claims.
///
/// Cliques are checked by pairwise adjacency; loops by the existence of a
/// spanning cycle of the members (backtracking over the induced subgraph;
/// members are at most `delta`, so this stays cheap). `Arbitrary` makes no
/// claim and `Singleton` only requires size one.
pub fn certify_partition(g: &Graph, p: &Partition, delta: usize) -> Certification {
    for &m in &p.members {
        if m as usize >= g.num_nodes() {
            return Certification::fail(alloc::format!("member {m} out of range"));
        }
    }
    let mut sorted = p.members.clone();
    sorted.sort_unstable();
    sorted.dedup();
    if sorted.len() != p.members.len() {
        return Certification::fail(String::from("repeated member"));
    }
    match p.kind {
        PartitionKind::Singleton => {
            if p.members.len() == 1 {
                Certification::ok()
            } else {
                Certification::fail(alloc::format!("singleton with {} members", p.members.len()))
            }
        }
        PartitionKind::Arbitrary => Certification::ok(),
        PartitionKind::Clique => {
            for (i, &u) in p.members.iter().enumerate() {
                for &v in &p.members[i + 1..] {
                    if !g.has_edge(u, v) {
                        return Certification::fail(alloc::format!("missing edge ({u}, {v})"));
                    }
                }
            }
            Certification::ok()
        }
        PartitionKind::Loop => {
            let k = p.members.len();
            if k < 3 {
                return Certification::fail(alloc::format!("loop with {k} members"));
            }
            if k > delta {
                return Certification::fail(alloc::format!("loop of length {k} exceeds bound {delta}"));
            }
            if has_spanning_cycle(g, &sorted) {
                Certification::ok()
            } else {
                Certification::fail(String::from("no spanning cycle over the members"))
            }
        }
    }
}

fn has_spanning_cycle(g: &Graph, members: &[NodeId]) -> bool {
    // backtracking Hamiltonian-cycle search on the induced subgraph
    let k = members.len();
    let start = members[0];
    let mut path = alloc::vec![start];
    let mut used = alloc::vec![false; k];
    used[0] = true;

    fn step(
        g: &Graph,
        members: &[NodeId],
        path: &mut Vec<NodeId>,
        used: &mut Vec<bool>,
    ) -> bool {
        if path.len() == members.len() {
            return g.has_edge(*path.last().unwrap(), path[0]);
        }
        let cur = *path.last().unwrap();
        for (i, &cand) in members.iter().enumerate() {
            if !used[i] && g.has_edge(cur, cand) {
                used[i] = true;
                path.push(cand);
                if step(g, members, path, used) {
                    return true;
                }
                path.pop();
                used[i] = false;
            }
        }
        false
    }

    step(g, members, &mut path, &mut used)
}

/// Brute-force canonical edge list under node relabeling; graphs are
/// isomorphic iff their forms are equal. Factorial in the node count, so
/// capped much lower than the other oracles.
pub const CANONICAL_CAP: usize = 8;

pub fn canonical_form(g: &Graph) -> Result<Vec<(NodeId, NodeId)>, SizeLimitError> {
    let n = g.num_nodes();
    if n > CANONICAL_CAP {
        return Err(SizeLimitError { nodes: n, cap: CANONICAL_CAP });
    }
    let mut perm: Vec<NodeId> = (0..n as NodeId).collect();
    let mut best: Option<Vec<(NodeId, NodeId)>> = None;
    permute(&mut perm, 0, &mut |perm| {
        let mut edges: Vec<(NodeId, NodeId)> = g
            .edges()
            .iter()
            .map(|&(u, v)| {
                let (a, b) = (perm[u as usize], perm[v as usize]);
                (a.min(b), a.max(b))
            })
            .collect();
        edges.sort_unstable();
        if best.as_ref().is_none_or(|b| edges < *b) {
            best = Some(edges);
        }
    });
    Ok(best.unwrap_or_default())
}

fn permute(perm: &mut Vec<NodeId>, k: usize, visit: &mut impl FnMut(&[NodeId])) {
    if k == perm.len() {
        visit(perm);
        return;
    }
    for i in k..perm.len() {
        perm.swap(k, i);
        permute(perm, k + 1, visit);
        perm.swap(k, i);
    }
}

/// Brute-force isomorphism test for small graphs.
pub fn isomorphic(a: &Graph, b: &Graph) -> Result<bool, SizeLimitError> {
    if a.num_nodes() != b.num_nodes() || a.num_edges() != b.num_edges() {
        return Ok(false);
    }
    Ok(canonical_form(a)? == canonical_form(b)?)
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

    fn cycle(n: usize) -> Graph {
        let edges: Vec<_> = (0..n as u32).map(|i| (i, (i + 1) % n as u32)).collect();
        Graph::from_edge_list(n, &edges).unwrap()
    }

    #[test]
    fn k4_has_one_maximal_clique() {
        assert_eq!(all_maximal_cliques(&complete(4)).unwrap(), vec![vec![0, 1, 2, 3]]);
    }

    #[test]
    fn path_maximal_cliques_are_edges() {
        let g = Graph::from_edge_list(3, &[(0, 1), (1, 2)]).unwrap();
        assert_eq!(all_maximal_cliques(&g).unwrap(), vec![vec![0, 1], vec![1, 2]]);
    }

    #[test]
    fn shared_node_triangles_both_listed() {
        let g = Graph::from_edge_list(5, &[(0, 1), (0, 2), (1, 2), (2, 3), (2, 4), (3, 4)]).unwrap();
        assert_eq!(
            all_maximal_cliques(&g).unwrap(),
            vec![vec![0, 1, 2], vec![2, 3, 4]]
        );
    }

    #[test]
    fn k4_cycles_split_by_length() {
        // 4 triangles plus 3 four-cycles, cross-checked against the closed
        // form sum_k C(4,k) (k-1)!/2
        let cycles = all_simple_cycles_upto(&complete(4), 4).unwrap();
        assert_eq!(cycles.len(), 7);
        assert_eq!(cycles.iter().filter(|c| c.len() == 3).count(), 4);
        assert_eq!(cycles.iter().filter(|c| c.len() == 4).count(), 3);
    }

    #[test]
    fn closed_form_counts_on_complete_graphs() {
        fn binom(n: usize, k: usize) -> usize {
            let mut r = 1usize;
            for i in 0..k {
                r = r * (n - i) / (i + 1);
            }
            r
        }
        fn fact(n: usize) -> usize {
            (1..=n).product::<usize>().max(1)
        }
        for n in 3..=6 {
            let expect: usize = (3..=n).map(|k| binom(n, k) * fact(k - 1) / 2).sum();
            let got = all_simple_cycles_upto(&complete(n), n).unwrap().len();
            assert_eq!(got, expect, "K{n}");
            assert_eq!(all_maximal_cliques(&complete(n)).unwrap().len(), 1);
        }
    }

    #[test]
    fn cycle_graph_has_single_cycle() {
        assert_eq!(all_simple_cycles_upto(&cycle(6), 6).unwrap().len(), 1);
        assert_eq!(all_simple_cycles_upto(&cycle(7), 6).unwrap().len(), 0);
    }

    #[test]
    fn trees_are_acyclic() {
        let g = Graph::from_edge_list(5, &[(0, 1), (0, 2), (2, 3), (2, 4)]).unwrap();
        assert!(all_simple_cycles_upto(&g, 10).unwrap().is_empty());
    }

    #[test]
    fn size_cap_is_enforced() {
        let g = Graph::from_edge_list(65, &[]).unwrap();
        assert!(all_maximal_cliques(&g).is_err());
        assert!(all_simple_cycles_upto(&g, 6).is_err());
    }

    #[test]
    fn certify_clique_and_loop() {
        let g = Graph::from_edge_list(4, &[(0, 1), (0, 2), (1, 2), (2, 3)]).unwrap();
        let ok = certify_partition(
            &g,
            &Partition { members: vec![0, 1, 2], kind: PartitionKind::Clique },
            6,
        );
        assert!(ok.valid);
        let bad = certify_partition(
            &g,
            &Partition { members: vec![0, 1, 3], kind: PartitionKind::Clique },
            6,
        );
        assert!(!bad.valid);
    }

    #[test]
    fn certify_loop_needs_spanning_cycle() {
        // path on 4 nodes: no spanning cycle
        let path = Graph::from_edge_list(4, &[(0u32, 1), (1, 2), (2, 3)]).unwrap();
        let c = certify_partition(
            &path,
            &Partition { members: vec![0, 1, 2, 3], kind: PartitionKind::Loop },
            6,
        );
        assert!(!c.valid);
        assert!(c.violation.unwrap().contains("no spanning cycle"));

        let square = cycle(4);
        let c = certify_partition(
            &square,
            &Partition { members: vec![0, 1, 2, 3], kind: PartitionKind::Loop },
            6,
        );
        assert!(c.valid);
        // same members, bound too small
        let c = certify_partition(
            &square,
            &Partition { members: vec![0, 1, 2, 3], kind: PartitionKind::Loop },
            3,
        );
        assert!(!c.valid);
    }

    #[test]
    fn canonical_form_detects_isomorphism() {
        let a = Graph::from_edge_list(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        let b = Graph::from_edge_list(4, &[(2, 0), (0, 3), (3, 1)]).unwrap();
        assert!(isomorphic(&a, &b).unwrap());
        let c = Graph::from_edge_list(4, &[(0, 1), (1, 2), (1, 3)]).unwrap();
        assert!(!isomorphic(&a, &c).unwrap());
    }
}
