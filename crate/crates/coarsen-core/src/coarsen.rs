//! Reduction of a graph over a disjoint node cover: supernode adjacency,
//! per-supernode weights, normalized adjacency and summed features.

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::graph::{FeatureMatrix, Graph};
use crate::matrix::SparseMatrix;
use crate::partition::PartitionSet;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CoarsenError {
    /// The partition set does not cover this graph's node set.
    InvalidPartition { reason: String },
}

impl fmt::Display for CoarsenError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CoarsenError::InvalidPartition { reason } => write!(f, "invalid partition: {reason}"),
        }
    }
}

impl core::error::Error for CoarsenError {}

/// A coarse view of a source graph under a disjoint node cover.
///
/// Supernode `i` stands for partition `i`. `super_graph` is the simple
/// (indicator) adjacency: supernodes are adjacent iff any cross-partition
/// edge exists. Self-structure is carried on the side instead of as
/// self-loops: `diag_weights[i]` is the weighted diagonal (twice the number
/// of edges internal to partition `i`, i.e. the sum over the partition of
/// internal degrees) and `block_sizes[i]` is the member count the indicator
/// rule assigns to diagonal blocks. Both are exposed because downstream
/// normalizations may want either.
///
/// `normalized_adjacency` row-scales the weighted coarse matrix so each
/// supernode contributes equally: row `i` is divided by `diag_weights[i]`,
/// with a divisor of `1` when the diagonal is zero (singletons and other
/// edge-free partitions), which keeps the matrix finite without special
/// cases downstream.
#[derive(Debug, Clone, PartialEq)]
pub struct CoarsenedGraph {
    pub super_graph: Graph,
    pub diag_weights: Vec<u64>,
    pub block_sizes: Vec<usize>,
    pub normalized_adjacency: SparseMatrix,
    pub features: Option<FeatureMatrix>,
    pub mapping: Vec<u32>,
}

impl CoarsenedGraph {
    pub fn num_supernodes(&self) -> usize {
        self.super_graph.num_nodes()
    }

    /// The coarse graph with the aggregated features attached, ready for a
    /// further conversion step.
    pub fn featured_super_graph(&self) -> Graph {
        match &self.features {
            Some(f) => self.super_graph.clone().with_features(f.clone()).expect("row count matches"),
            None => self.super_graph.clone(),
        }
    }
}

fn check_cover(g: &Graph, p: &PartitionSet) -> Result<(), CoarsenError> {
    if p.source_nodes() != g.num_nodes() {
        return Err(CoarsenError::InvalidPartition {
            reason: alloc::format!(
                "partition set covers {} nodes, graph has {}",
                p.source_nodes(),
                g.num_nodes()
            ),
        });
    }
    Ok(())
}

/// Coarsens `g` over the disjoint cover `p` by sparse traversal.
///
/// This is the production path: one pass over the edge list classifies every
/// edge as internal (feeding the weighted diagonal) or crossing (feeding the
/// supernode adjacency and the off-diagonal weights). Features are summed
/// per partition.
pub fn coarsen_by_partition(g: &Graph, p: &PartitionSet) -> Result<CoarsenedGraph, CoarsenError> {
    check_cover(g, p)?;
    let n = p.len();
    let mapping = p.mapping();

    let mut diag = alloc::vec![0u64; n];
    let mut cross: Vec<(u32, u32)> = Vec::with_capacity(g.num_edges());
    for &(u, v) in g.edges() {
        let (su, sv) = (mapping[u as usize], mapping[v as usize]);
        if su == sv {
            // both orientations of an internal edge land in the diagonal block
            diag[su as usize] += 2;
        } else {
            cross.push((su.min(sv), su.max(sv)));
        }
    }
    cross.sort_unstable();
    let mut super_edges: Vec<(u32, u32)> = Vec::with_capacity(cross.len());
    let mut counts: Vec<u64> = Vec::with_capacity(cross.len());
    for &pair in &cross {
        if super_edges.last() == Some(&pair) {
            *counts.last_mut().expect("nonempty with last edge") += 1;
        } else {
            super_edges.push(pair);
            counts.push(1);
        }
    }
    // normalized rows built straight into CSR. Row a receives its smaller
    // partners while earlier edge groups run, its diagonal when group a
    // starts, and its larger partners from its own group, so columns come
    // out ascending without a sort.
    let mut row_offsets = alloc::vec![0usize; n + 1];
    for &(i, j) in &super_edges {
        row_offsets[i as usize + 1] += 1;
        row_offsets[j as usize + 1] += 1;
    }
    for i in 0..n {
        row_offsets[i + 1] += row_offsets[i] + usize::from(diag[i] > 0);
    }
    let nnz = row_offsets[n];
    let mut cursor: Vec<usize> = row_offsets[..n].to_vec();
    let mut cols = alloc::vec![0u32; nnz];
    let mut vals = alloc::vec![0.0f64; nnz];
    let scaled = |c: u64, d: u64| if d > 0 { c as f64 / d as f64 } else { c as f64 };
    let mut k = 0usize;
    for a in 0..n {
        if diag[a] > 0 {
            cols[cursor[a]] = a as u32;
            vals[cursor[a]] = 1.0;
            cursor[a] += 1;
        }
        while k < super_edges.len() && super_edges[k].0 as usize == a {
            let (i, j) = (super_edges[k].0 as usize, super_edges[k].1 as usize);
            cols[cursor[i]] = j as u32;
            vals[cursor[i]] = scaled(counts[k], diag[i]);
            cursor[i] += 1;
            cols[cursor[j]] = i as u32;
            vals[cursor[j]] = scaled(counts[k], diag[j]);
            cursor[j] += 1;
            k += 1;
        }
    }
    // the supernode adjacency is the normalized structure minus diagonals,
    // recovered by a sequential filter instead of a second scatter
    let mut adj_offsets = alloc::vec![0usize; n + 1];
    let mut adj_data = alloc::vec![0 as crate::graph::NodeId; super_edges.len() * 2];
    let mut out = 0usize;
    for i in 0..n {
        for k in row_offsets[i]..row_offsets[i + 1] {
            if cols[k] as usize != i {
                adj_data[out] = cols[k];
                out += 1;
            }
        }
        adj_offsets[i + 1] = out;
    }
    debug_assert_eq!(out, super_edges.len() * 2);
    let super_graph = Graph::from_csr_parts(n, adj_offsets, adj_data, super_edges);

    let normalized_adjacency = SparseMatrix::from_csr(n, n, row_offsets, cols, vals);

    let features = g.features().map(|h| {
        let mut out = FeatureMatrix::zeros(n, h.dim());
        for (idx, part) in p.partitions().iter().enumerate() {
            for &m in &part.members {
                for (acc, v) in out.row_mut(idx).iter_mut().zip(h.row(m as usize)) {
                    *acc += v;
                }
            }
        }
        out
    });

    Ok(CoarsenedGraph {
        super_graph,
        diag_weights: diag,
        block_sizes: p.block_sizes(),
        normalized_adjacency,
        features,
        mapping,
    })
}

/// Same contract as [`coarsen_by_partition`], computed the slow way.
///
/// Materializes the 0/1 indication matrix, forms the full weighted product
/// with the dense adjacency and applies the indicator rule to the result.
/// Quadratic in the node count; kept as an independent second route for
/// cross-checking, not for production use.
pub fn matrix_route_coarsen(g: &Graph, p: &PartitionSet) -> Result<CoarsenedGraph, CoarsenError> {
    check_cover(g, p)?;
    let big_n = g.num_nodes();
    let n = p.len();

    let mut a = alloc::vec![alloc::vec![0u64; big_n]; big_n];
    for &(u, v) in g.edges() {
        a[u as usize][v as usize] = 1;
        a[v as usize][u as usize] = 1;
    }
    let mut m_p = alloc::vec![alloc::vec![0u64; big_n]; n];
    for (i, part) in p.partitions().iter().enumerate() {
        for &m in &part.members {
            m_p[i][m as usize] = 1;
        }
    }

    // tmp = M_p * A, then A' = tmp * M_p^T
    let mut tmp = alloc::vec![alloc::vec![0u64; big_n]; n];
    for i in 0..n {
        for u in 0..big_n {
            if m_p[i][u] == 1 {
                for w in 0..big_n {
                    tmp[i][w] += a[u][w];
                }
            }
        }
    }
    let mut a_prime = alloc::vec![alloc::vec![0u64; n]; n];
    for i in 0..n {
        for j in 0..n {
            let mut acc = 0u64;
            for w in 0..big_n {
                acc += tmp[i][w] * m_p[j][w];
            }
            a_prime[i][j] = acc;
        }
    }

    let diag: Vec<u64> = (0..n).map(|i| a_prime[i][i]).collect();
    let mut super_edges = Vec::new();
    for i in 0..n {
        for j in (i + 1)..n {
            // indicator: off-diagonal blocks map to edge existence
            if a_prime[i][j] > 0 {
                super_edges.push((i as u32, j as u32));
            }
        }
    }
    let super_graph = Graph::from_edge_list(n, &super_edges).expect("indicator pairs are valid");

    let mut entries = Vec::new();
    for i in 0..n {
        for j in 0..n {
            if i == j {
                if diag[i] > 0 {
                    entries.push((i, i, 1.0));
                }
            } else if a_prime[i][j] > 0 {
                let value = if diag[i] > 0 {
                    a_prime[i][j] as f64 / diag[i] as f64
                } else {
                    a_prime[i][j] as f64
                };
                entries.push((i, j, value));
            }
        }
    }
    let normalized_adjacency = SparseMatrix::from_sorted(n, n, entries);

    let features = g.features().map(|h| {
        let d = h.dim();
        let mut out = FeatureMatrix::zeros(n, d);
        for i in 0..n {
            for u in 0..big_n {
                if m_p[i][u] == 1 {
                    for (acc, v) in out.row_mut(i).iter_mut().zip(h.row(u)) {
                        *acc += v;
                    }
                }
            }
        }
        out
    });

    Ok(CoarsenedGraph {
        super_graph,
        diag_weights: diag,
        block_sizes: p.block_sizes(),
        normalized_adjacency,
        features,
        mapping: p.mapping(),
    })
}
