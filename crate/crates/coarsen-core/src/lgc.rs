//! Line graph conversion: the edge-central view.

use alloc::vec::Vec;
use core::fmt;

use crate::graph::{FeatureMatrix, Graph, NodeId};

/// A graph whose nodes index the source graph's edges, adjacent when the
/// origin edges share exactly one endpoint. Line-node `i` originates from
/// the `i`-th edge of the source's canonical edge list, so the ordering is
/// reproducible from the source graph alone.
#[derive(Debug, Clone, PartialEq)]
pub struct LineGraphView {
    pub graph: Graph,
    pub edge_origin: Vec<(NodeId, NodeId)>,
    pub features: Option<FeatureMatrix>,
}

impl LineGraphView {
    pub fn num_line_nodes(&self) -> usize {
        self.graph.num_nodes()
    }
}

/// Whether the conversion had anything to convert. An edgeless input is not
/// an error; it yields an empty view that reports should flag.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LineGraphStatus {
    Complete,
    EmptyEdgeSet,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LgcError {
    /// The source graph has neither node features nor edge labels.
    MissingFeatures,
}

impl fmt::Display for LgcError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LgcError::MissingFeatures => {
                write!(f, "source graph has neither node features nor edge labels")
            }
        }
    }
}

impl core::error::Error for LgcError {}

/// Exact line-graph construction.
///
/// Isolated source nodes contribute nothing. Line edges are generated at the
/// shared endpoint, so each adjacency appears exactly once.
pub fn line_graph(g: &Graph) -> (LineGraphView, LineGraphStatus) {
    let m = g.num_edges();
    let mut incident: Vec<Vec<u32>> = alloc::vec![Vec::new(); g.num_nodes()];
    for (idx, &(u, v)) in g.edges().iter().enumerate() {
        incident[u as usize].push(idx as u32);
        incident[v as usize].push(idx as u32);
    }
    let mut line_edges = Vec::new();
    for ids in &incident {
        for (a, &e1) in ids.iter().enumerate() {
            for &e2 in &ids[a + 1..] {
                line_edges.push((e1.min(e2), e1.max(e2)));
            }
        }
    }
    let graph = Graph::from_edge_list(m, &line_edges).expect("line edges are valid");
    let status = if m == 0 { LineGraphStatus::EmptyEdgeSet } else { LineGraphStatus::Complete };
    (
        LineGraphView { graph, edge_origin: g.edges().to_vec(), features: None },
        status,
    )
}

/// Features for the line-node set.
///
/// If the source carries edge labels, each line-node gets the one-hot of its
/// origin edge's label; otherwise each line-node sums its two endpoints'
/// feature rows.
pub fn lgc_features(g: &Graph, lg: &LineGraphView) -> Result<FeatureMatrix, LgcError> {
    if let Some(labels) = g.edge_labels() {
        let dim = labels.iter().max().map_or(0, |&m| m + 1);
        let mut out = FeatureMatrix::zeros(lg.num_line_nodes(), dim);
        for (i, &(u, v)) in lg.edge_origin.iter().enumerate() {
            let idx = g.edge_index(u, v).expect("origin edge exists");
            out.row_mut(i)[labels[idx]] = 1.0;
        }
        return Ok(out);
    }
    if let Some(h) = g.features() {
        let mut out = FeatureMatrix::zeros(lg.num_line_nodes(), h.dim());
        for (i, &(u, v)) in lg.edge_origin.iter().enumerate() {
            for ((acc, a), b) in
                out.row_mut(i).iter_mut().zip(h.row(u as usize)).zip(h.row(v as usize))
            {
                *acc = a + b;
            }
        }
        return Ok(out);
    }
    Err(LgcError::MissingFeatures)
}

/// Conversion plus feature construction in one step.
pub fn lgc_view(g: &Graph) -> Result<(LineGraphView, LineGraphStatus), LgcError> {
    let (mut view, status) = line_graph(g);
    view.features = Some(lgc_features(g, &view)?);
    Ok((view, status))
}
