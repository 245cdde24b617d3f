//! Scale and runtime reports over datasets.

use std::time::Instant;

use serde::{Deserialize, Serialize};

use crate::pipeline::{coarsen_with, RunConfig, Strategy};
use crate::tudataset::Dataset;

/// Per (dataset, strategy) scale measurements. Ratios are relative changes
/// against the original averages: negative means reduction.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ScaleRow {
    pub dataset: String,
    pub strategy: String,
    pub avg_nodes_original: f64,
    pub avg_edges_original: f64,
    pub avg_nodes: f64,
    pub avg_edges: f64,
    pub ratio_nodes: f64,
    pub ratio_edges: f64,
}

/// Per-strategy means over a report's rows.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ScaleAggregate {
    pub strategy: String,
    pub mean_ratio_nodes: f64,
    pub mean_ratio_edges: f64,
}

#[derive(Debug, Clone, PartialEq, Default, Serialize, Deserialize)]
pub struct ScaleReport {
    pub rows: Vec<ScaleRow>,
    pub aggregates: Vec<ScaleAggregate>,
}

impl ScaleReport {
    pub fn from_rows(rows: Vec<ScaleRow>) -> Self {
        let mut strategies: Vec<String> = rows.iter().map(|r| r.strategy.clone()).collect();
        strategies.dedup();
        let aggregates = strategies
            .into_iter()
            .map(|strategy| {
                let picked: Vec<&ScaleRow> =
                    rows.iter().filter(|r| r.strategy == strategy).collect();
                let n = picked.len() as f64;
                ScaleAggregate {
                    strategy,
                    mean_ratio_nodes: picked.iter().map(|r| r.ratio_nodes).sum::<f64>() / n,
                    mean_ratio_edges: picked.iter().map(|r| r.ratio_edges).sum::<f64>() / n,
                }
            })
            .collect();
        ScaleReport { rows, aggregates }
    }

    /// Mean node/edge reduction for one strategy.
    pub fn mean_reduction(&self, strategy: &str) -> Option<(f64, f64)> {
        self.aggregates
            .iter()
            .find(|a| a.strategy == strategy)
            .map(|a| (a.mean_ratio_nodes, a.mean_ratio_edges))
    }

    pub fn text_table(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!(
            "{:<14} {:<9} {:>10} {:>10} {:>10} {:>10} {:>8} {:>8}\n",
            "dataset", "strategy", "orig V", "orig E", "V", "E", "r_V", "r_E"
        ));
        for r in &self.rows {
            out.push_str(&format!(
                "{:<14} {:<9} {:>10.2} {:>10.2} {:>10.2} {:>10.2} {:>+8.2} {:>+8.2}\n",
                r.dataset,
                r.strategy,
                r.avg_nodes_original,
                r.avg_edges_original,
                r.avg_nodes,
                r.avg_edges,
                r.ratio_nodes,
                r.ratio_edges
            ));
        }
        out
    }
}

/// Runs one strategy over every graph and averages the resulting sizes.
pub fn scale_row(d: &Dataset, strategy: Strategy, cfg: &RunConfig) -> ScaleRow {
    let m = d.graphs.len() as f64;
    let mut nodes = 0usize;
    let mut edges = 0usize;
    for g in &d.graphs {
        let (coarse, _) = coarsen_with(strategy, g, cfg);
        nodes += coarse.super_graph.num_nodes();
        edges += coarse.super_graph.num_edges();
    }
    let avg_nodes_original = d.avg_nodes();
    let avg_edges_original = d.avg_edges();
    let avg_nodes = nodes as f64 / m;
    let avg_edges = edges as f64 / m;
    ScaleRow {
        dataset: d.name.clone(),
        strategy: strategy.as_str().to_string(),
        avg_nodes_original,
        avg_edges_original,
        avg_nodes,
        avg_edges,
        ratio_nodes: (avg_nodes - avg_nodes_original) / avg_nodes_original,
        ratio_edges: (avg_edges - avg_edges_original) / avg_edges_original,
    }
}

pub fn scale_report(d: &Dataset, strategies: &[Strategy], cfg: &RunConfig) -> ScaleReport {
    ScaleReport::from_rows(strategies.iter().map(|&s| scale_row(d, s, cfg)).collect())
}

/// Wall-clock timing of the coarsening pass alone, single-threaded.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RuntimeRow {
    pub dataset: String,
    pub strategy: String,
    /// Median over repetitions, seconds.
    pub seconds: f64,
    pub graphs_per_sec: f64,
    pub total_nodes: usize,
    pub total_edges: usize,
    pub repetitions: usize,
}

impl RuntimeRow {
    pub fn text_line(&self) -> String {
        format!(
            "{:<14} {:<9} {:>9.3}s {:>12.1} graphs/s  (|V| {} |E| {} reps {})",
            self.dataset,
            self.strategy,
            self.seconds,
            self.graphs_per_sec,
            self.total_nodes,
            self.total_edges,
            self.repetitions
        )
    }
}

fn median(mut xs: Vec<f64>) -> f64 {
    xs.sort_by(|a, b| a.partial_cmp(b).unwrap());
    let n = xs.len();
    if n % 2 == 1 {
        xs[n / 2]
    } else {
        (xs[n / 2 - 1] + xs[n / 2]) / 2.0
    }
}

pub fn runtime_report(
    d: &Dataset,
    strategy: Strategy,
    cfg: &RunConfig,
    repetitions: usize,
) -> RuntimeRow {
    assert!(repetitions >= 1);
    let mut times = Vec::with_capacity(repetitions);
    for _ in 0..repetitions {
        let start = Instant::now();
        for g in &d.graphs {
            std::hint::black_box(coarsen_with(strategy, g, cfg));
        }
        times.push(start.elapsed().as_secs_f64());
    }
    let seconds = median(times);
    RuntimeRow {
        dataset: d.name.clone(),
        strategy: strategy.as_str().to_string(),
        seconds,
        graphs_per_sec: d.graphs.len() as f64 / seconds,
        total_nodes: d.graphs.iter().map(|g| g.num_nodes()).sum(),
        total_edges: d.graphs.iter().map(|g| g.num_edges()).sum(),
        repetitions,
    }
}
