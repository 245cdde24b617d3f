//! Immutable undirected graph with sorted adjacency lists.

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

/// Node identifier; nodes of a graph are `0..num_nodes`. 32 bits keep the
/// hot arrays compact; graphs in this domain never approach the limit.
pub type NodeId = u32;

/// Errors raised while constructing a [`Graph`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GraphError {
    /// An edge endpoint is not in `[0, num_nodes)`.
    OutOfRange { node: NodeId, num_nodes: usize },
    /// More nodes than the 32-bit id space.
    TooManyNodes { num_nodes: usize },
    /// An edge connects a node to itself.
    SelfLoop { node: NodeId },
    /// The same unordered pair appears more than once.
    DuplicateEdge { u: NodeId, v: NodeId },
    /// A label vector does not have one entry per node/edge.
    LabelLength { expected: usize, got: usize },
    /// Feature rows are missing or ragged.
    FeatureShape { detail: String },
}

impl fmt::Display for GraphError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GraphError::OutOfRange { node, num_nodes } => {
                write!(f, "node {node} out of range for graph with {num_nodes} nodes")
            }
            GraphError::TooManyNodes { num_nodes } => {
                write!(f, "{num_nodes} nodes exceed the 32-bit id space")
            }
            GraphError::SelfLoop { node } => write!(f, "self-loop on node {node}"),
            GraphError::DuplicateEdge { u, v } => write!(f, "duplicate edge ({u}, {v})"),
            GraphError::LabelLength { expected, got } => {
                write!(f, "label vector has {got} entries, expected {expected}")
            }
            GraphError::FeatureShape { detail } => write!(f, "bad feature matrix: {detail}"),
        }
    }
}

impl core::error::Error for GraphError {}

/// Dense row-major feature matrix, one row per node.
#[derive(Debug, Clone, PartialEq)]
pub struct FeatureMatrix {
    rows: usize,
    dim: usize,
    data: Vec<f64>,
}

impl FeatureMatrix {
    pub fn new(rows: usize, dim: usize, data: Vec<f64>) -> Result<Self, GraphError> {
        if data.len() != rows * dim {
            return Err(GraphError::FeatureShape {
                detail: alloc::format!("{} values for {} rows of dim {}", data.len(), rows, dim),
            });
        }
        Ok(FeatureMatrix { rows, dim, data })
    }

    pub fn from_rows(rows: &[Vec<f64>]) -> Result<Self, GraphError> {
        let dim = rows.first().map(Vec::len).unwrap_or(0);
        if let Some(bad) = rows.iter().find(|r| r.len() != dim) {
            return Err(GraphError::FeatureShape {
                detail: alloc::format!("ragged row of len {} (expected {})", bad.len(), dim),
            });
        }
        let mut data = Vec::with_capacity(rows.len() * dim);
        for r in rows {
            data.extend_from_slice(r);
        }
        Ok(FeatureMatrix { rows: rows.len(), dim, data })
    }

    pub fn zeros(rows: usize, dim: usize) -> Self {
        FeatureMatrix { rows, dim, data: alloc::vec![0.0; rows * dim] }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn row(&self, i: usize) -> &[f64] {
        &self.data[i * self.dim..(i + 1) * self.dim]
    }

    pub fn row_mut(&mut self, i: usize) -> &mut [f64] {
        &mut self.data[i * self.dim..(i + 1) * self.dim]
    }

    /// Per-column totals; feature aggregation by summation preserves these.
    pub fn column_sums(&self) -> Vec<f64> {
        let mut sums = alloc::vec![0.0; self.dim];
        for i in 0..self.rows {
            for (s, v) in sums.iter_mut().zip(self.row(i)) {
                *s += v;
            }
        }
        sums
    }
}

/// Immutable undirected simple graph.
///
/// Adjacency is kept as sorted neighbor lists in compressed sparse rows
/// (one flat array plus offsets, no per-node allocations) alongside the
/// canonical edge list (`u < v`, lexicographically sorted), so traversal is
/// linear in degree, memory access stays local on large graphs, and edge
/// identity is stable for downstream consumers.
#[derive(Debug, Clone, PartialEq)]
pub struct Graph {
    num_nodes: usize,
    adj_offsets: Vec<usize>,
    adj_data: Vec<NodeId>,
    edges: Vec<(NodeId, NodeId)>,
    node_labels: Option<Vec<usize>>,
    edge_labels: Option<Vec<usize>>,
    features: Option<FeatureMatrix>,
}

impl Graph {
    /// Builds a graph from an unordered edge list.
    ///
    /// Duplicate pairs (in either orientation) and self-loops are rejected,
    /// not silently dropped.
    pub fn from_edge_list(num_nodes: usize, pairs: &[(NodeId, NodeId)]) -> Result<Self, GraphError> {
        if num_nodes > u32::MAX as usize {
            return Err(GraphError::TooManyNodes { num_nodes });
        }
        let mut edges = Vec::with_capacity(pairs.len());
        for &(u, v) in pairs {
            if u as usize >= num_nodes {
                return Err(GraphError::OutOfRange { node: u, num_nodes });
            }
            if v as usize >= num_nodes {
                return Err(GraphError::OutOfRange { node: v, num_nodes });
            }
            if u == v {
                return Err(GraphError::SelfLoop { node: u });
            }
            edges.push((u.min(v), u.max(v)));
        }
        edges.sort_unstable();
        if let Some(w) = edges.windows(2).find(|w| w[0] == w[1]) {
            return Err(GraphError::DuplicateEdge { u: w[0].0, v: w[0].1 });
        }
        // CSR fill from the lex-sorted edge list: each row receives its
        // smaller partners first, then its larger ones, both ascending, so
        // rows come out sorted without a per-row sort.
        let mut adj_offsets = alloc::vec![0usize; num_nodes + 1];
        for &(u, v) in &edges {
            adj_offsets[u as usize + 1] += 1;
            adj_offsets[v as usize + 1] += 1;
        }
        for i in 0..num_nodes {
            adj_offsets[i + 1] += adj_offsets[i];
        }
        let mut cursor = adj_offsets.clone();
        let mut adj_data = alloc::vec![0 as NodeId; edges.len() * 2];
        for &(u, v) in &edges {
            adj_data[cursor[u as usize]] = v;
            cursor[u as usize] += 1;
            adj_data[cursor[v as usize]] = u;
            cursor[v as usize] += 1;
        }
        Ok(Graph {
            num_nodes,
            adj_offsets,
            adj_data,
            edges,
            node_labels: None,
            edge_labels: None,
            features: None,
        })
    }

    /// Assembles a graph from parts that already satisfy every invariant:
    /// sorted CSR rows matching the lex-sorted `u < v` edge list. Lets the
    /// coarsening kernel avoid a second validation and scatter pass; the
    /// kernel's output is cross-checked against the explicit matrix route
    /// in the equivalence suite.
    pub(crate) fn from_csr_parts(
        num_nodes: usize,
        adj_offsets: Vec<usize>,
        adj_data: Vec<NodeId>,
        edges: Vec<(NodeId, NodeId)>,
    ) -> Self {
        debug_assert_eq!(adj_offsets.len(), num_nodes + 1);
        debug_assert_eq!(adj_data.len(), edges.len() * 2);
        Graph {
            num_nodes,
            adj_offsets,
            adj_data,
            edges,
            node_labels: None,
            edge_labels: None,
            features: None,
        }
    }

    /// Attaches one categorical label per node.
    pub fn with_node_labels(mut self, labels: Vec<usize>) -> Result<Self, GraphError> {
        if labels.len() != self.num_nodes {
            return Err(GraphError::LabelLength { expected: self.num_nodes, got: labels.len() });
        }
        self.node_labels = Some(labels);
        Ok(self)
    }

    /// Attaches one categorical label per edge, in canonical edge order.
    pub fn with_edge_labels(mut self, labels: Vec<usize>) -> Result<Self, GraphError> {
        if labels.len() != self.edges.len() {
            return Err(GraphError::LabelLength { expected: self.edges.len(), got: labels.len() });
        }
        self.edge_labels = Some(labels);
        Ok(self)
    }

    /// Attaches a dense feature matrix with one row per node.
    pub fn with_features(mut self, features: FeatureMatrix) -> Result<Self, GraphError> {
        if features.rows() != self.num_nodes {
            return Err(GraphError::FeatureShape {
                detail: alloc::format!("{} rows for {} nodes", features.rows(), self.num_nodes),
            });
        }
        self.features = Some(features);
        Ok(self)
    }

    pub fn num_nodes(&self) -> usize {
        self.num_nodes
    }

    pub fn num_edges(&self) -> usize {
        self.edges.len()
    }

    /// Canonical edge list: `u < v`, lexicographically sorted.
    pub fn edges(&self) -> &[(NodeId, NodeId)] {
        &self.edges
    }

    /// Sorted neighbors of `v`.
    pub fn neighbors(&self, v: NodeId) -> &[NodeId] {
        &self.adj_data[self.adj_offsets[v as usize]..self.adj_offsets[v as usize + 1]]
    }

    pub fn degree(&self, v: NodeId) -> usize {
        self.adj_offsets[v as usize + 1] - self.adj_offsets[v as usize]
    }

    pub fn has_edge(&self, u: NodeId, v: NodeId) -> bool {
        (u as usize) < self.num_nodes && self.neighbors(u).binary_search(&v).is_ok()
    }

    /// Position of the unordered pair in the canonical edge list.
    pub fn edge_index(&self, u: NodeId, v: NodeId) -> Option<usize> {
        self.edges.binary_search(&(u.min(v), u.max(v))).ok()
    }

    pub fn node_labels(&self) -> Option<&[usize]> {
        self.node_labels.as_deref()
    }

    pub fn edge_labels(&self) -> Option<&[usize]> {
        self.edge_labels.as_deref()
    }

    pub fn features(&self) -> Option<&FeatureMatrix> {
        self.features.as_ref()
    }

    /// Degree sequence indexed by node.
    pub fn degrees(&self) -> Vec<usize> {
        (0..self.num_nodes as NodeId).map(|v| self.degree(v)).collect()
    }
}
