//! Strategy dispatch and per-graph view construction.

use std::fmt;
use std::str::FromStr;

use coarsen_core::baseline::{coarsen_neighbor, coarsen_random};
use coarsen_core::coarsen::{coarsen_by_partition, CoarsenedGraph};
use coarsen_core::graph::Graph;
use coarsen_core::lcc::{coarsen_lcc, LccConfig};
use coarsen_core::lgc::{lgc_features, line_graph, LineGraphStatus, LineGraphView};
use coarsen_core::partition::PartitionSet;

/// Coarsening strategy. `Identity` keeps every node a singleton and exists
/// as a diagnostic for reports (ratios must come out exactly zero).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Strategy {
    Lcc,
    Random,
    Neighbor,
    Identity,
}

impl Strategy {
    pub fn as_str(self) -> &'static str {
        match self {
            Strategy::Lcc => "lcc",
            Strategy::Random => "random",
            Strategy::Neighbor => "neighbor",
            Strategy::Identity => "identity",
        }
    }
}

impl fmt::Display for Strategy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Strategy {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "lcc" => Ok(Strategy::Lcc),
            "random" => Ok(Strategy::Random),
            "neighbor" => Ok(Strategy::Neighbor),
            "identity" => Ok(Strategy::Identity),
            other => Err(format!("unknown strategy {other:?}")),
        }
    }
}

/// Which graph the conversion step consumes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LineGraphSource {
    /// The intermediate coarsened graph (the default pipeline order).
    Coarsened,
    /// The untouched input, for ablations.
    Original,
}

#[derive(Debug, Clone, Copy)]
pub struct RunConfig {
    pub lcc: LccConfig,
    pub seed: u64,
    /// Group-count parameter of the random baseline.
    pub random_groups: usize,
    pub line_graph_of: LineGraphSource,
}

impl Default for RunConfig {
    fn default() -> Self {
        RunConfig {
            lcc: LccConfig::default(),
            seed: 0,
            random_groups: 5,
            line_graph_of: LineGraphSource::Coarsened,
        }
    }
}

/// Runs one strategy on one graph.
pub fn coarsen_with(strategy: Strategy, g: &Graph, cfg: &RunConfig) -> (CoarsenedGraph, PartitionSet) {
    match strategy {
        Strategy::Lcc => {
            let (coarse, pset, _) = coarsen_lcc(g, &cfg.lcc);
            (coarse, pset)
        }
        Strategy::Random => coarsen_random(g, cfg.random_groups, cfg.seed),
        Strategy::Neighbor => coarsen_neighbor(g),
        Strategy::Identity => {
            let pset = PartitionSet::singletons(g.num_nodes());
            let coarse = coarsen_by_partition(g, &pset).expect("identity cover");
            (coarse, pset)
        }
    }
}

/// The three views of one input graph.
#[derive(Debug, Clone)]
pub struct GraphViews {
    pub coarse: CoarsenedGraph,
    pub pset: PartitionSet,
    pub line: LineGraphView,
    pub line_status: LineGraphStatus,
}

/// Builds the coarse and line-graph views; the original is the input itself.
///
/// The line-node features fall back to plain structure when the conversion
/// source carries no features (possible only when the input had none).
pub fn build_views(g: &Graph, strategy: Strategy, cfg: &RunConfig) -> GraphViews {
    let (coarse, pset) = coarsen_with(strategy, g, cfg);
    let source = match cfg.line_graph_of {
        LineGraphSource::Coarsened => coarse.featured_super_graph(),
        LineGraphSource::Original => g.clone(),
    };
    let (mut line, line_status) = line_graph(&source);
    if let Ok(f) = lgc_features(&source, &line) {
        line.features = Some(f);
    }
    GraphViews { coarse, pset, line, line_status }
}
