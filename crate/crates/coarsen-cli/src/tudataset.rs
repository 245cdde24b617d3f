//! Reader and writer for the TUDataset plain-text benchmark layout.
//!
//! A dataset directory `dir/NAME/` holds `NAME_A.txt` (comma-separated
//! 1-indexed edge pairs over global node ids), `NAME_graph_indicator.txt`
//! (1-indexed graph id per node) and `NAME_graph_labels.txt`, plus optional
//! `NAME_node_labels.txt` and `NAME_edge_labels.txt`. Nodes are re-indexed
//! 0-based per graph, the two orientations of an edge are merged (files that
//! omit the mirror orientation are accepted), and label values are remapped
//! to contiguous 0-based ids in sorted order of the raw values.

use std::collections::BTreeMap;
use std::fs::File;
use std::io::{BufRead, BufReader, BufWriter, Write};
use std::path::{Path, PathBuf};

use coarsen_core::features;
use coarsen_core::graph::{Graph, GraphError};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum IngestError {
    #[error("missing required file {}", path.display())]
    MissingFile { path: PathBuf },
    #[error("{file}:{line}: {detail}")]
    MalformedLine { file: String, line: usize, detail: String },
    #[error("{file}:{line}: node {node} assigned to nonexistent graph {graph} ({num_graphs} graphs)")]
    IndicatorGap { file: String, line: usize, node: usize, graph: i64, num_graphs: usize },
    #[error("dataset {name} has no node labels")]
    MissingNodeLabels { name: String },
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error("graph construction: {0}")]
    Graph(#[from] GraphError),
}

/// A loaded multi-graph classification dataset.
#[derive(Debug, Clone, PartialEq)]
pub struct Dataset {
    pub name: String,
    pub graphs: Vec<Graph>,
    /// Per-graph class id, contiguous from 0.
    pub labels: Vec<usize>,
    pub class_count: usize,
    /// Distinct node-label count across the dataset, if labels are present.
    pub node_label_count: Option<usize>,
    /// Distinct edge-label count across the dataset, if labels are present.
    pub edge_label_count: Option<usize>,
}

impl Dataset {
    pub fn len(&self) -> usize {
        self.graphs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.graphs.is_empty()
    }

    pub fn avg_nodes(&self) -> f64 {
        let total: usize = self.graphs.iter().map(Graph::num_nodes).sum();
        total as f64 / self.graphs.len() as f64
    }

    pub fn avg_edges(&self) -> f64 {
        let total: usize = self.graphs.iter().map(Graph::num_edges).sum();
        total as f64 / self.graphs.len() as f64
    }
}

fn open_required(path: &Path) -> Result<BufReader<File>, IngestError> {
    if !path.exists() {
        return Err(IngestError::MissingFile { path: path.to_path_buf() });
    }
    Ok(BufReader::new(File::open(path)?))
}

fn file_label(path: &Path) -> String {
    path.file_name().map(|n| n.to_string_lossy().into_owned()).unwrap_or_default()
}

fn read_int_column(path: &Path) -> Result<Vec<i64>, IngestError> {
    let file = file_label(path);
    let mut out = Vec::new();
    for (idx, line) in open_required(path)?.lines().enumerate() {
        let line = line?;
        let trimmed = line.trim();
        if trimmed.is_empty() {
            continue;
        }
        let value = trimmed.parse::<i64>().map_err(|e| IngestError::MalformedLine {
            file: file.clone(),
            line: idx + 1,
            detail: format!("expected integer, got {trimmed:?} ({e})"),
        })?;
        out.push(value);
    }
    Ok(out)
}

/// Sorted distinct raw values -> contiguous 0-based ids.
fn contiguous_remap(raw: &[i64]) -> (Vec<usize>, usize) {
    let mut distinct: Vec<i64> = raw.to_vec();
    distinct.sort_unstable();
    distinct.dedup();
    let index: BTreeMap<i64, usize> =
        distinct.iter().enumerate().map(|(i, &v)| (v, i)).collect();
    (raw.iter().map(|v| index[v]).collect(), distinct.len())
}

/// Loads one dataset from `dir/name/`.
pub fn load_tudataset(dir: &Path, name: &str) -> Result<Dataset, IngestError> {
    let base = dir.join(name);
    let a_path = base.join(format!("{name}_A.txt"));
    let ind_path = base.join(format!("{name}_graph_indicator.txt"));
    let glab_path = base.join(format!("{name}_graph_labels.txt"));
    let nlab_path = base.join(format!("{name}_node_labels.txt"));
    let elab_path = base.join(format!("{name}_edge_labels.txt"));

    let raw_graph_labels = read_int_column(&glab_path)?;
    let num_graphs = raw_graph_labels.len();
    let (labels, class_count) = contiguous_remap(&raw_graph_labels);

    let ind_file = file_label(&ind_path);
    let indicator = read_int_column(&ind_path)?;
    let num_nodes_total = indicator.len();
    // graph id per node, checked against the label file
    let mut graph_of: Vec<usize> = Vec::with_capacity(num_nodes_total);
    for (idx, &gid) in indicator.iter().enumerate() {
        if gid < 1 || gid as usize > num_graphs {
            return Err(IngestError::IndicatorGap {
                file: ind_file.clone(),
                line: idx + 1,
                node: idx + 1,
                graph: gid,
                num_graphs,
            });
        }
        graph_of.push(gid as usize - 1);
    }

    // local ids: nodes of each graph in ascending global order
    let mut local_id: Vec<u32> = vec![0; num_nodes_total];
    let mut graph_sizes: Vec<usize> = vec![0; num_graphs];
    for (node, &g) in graph_of.iter().enumerate() {
        local_id[node] = graph_sizes[g] as u32;
        graph_sizes[g] += 1;
    }

    let node_labels = if nlab_path.exists() {
        let raw = read_int_column(&nlab_path)?;
        if raw.len() != num_nodes_total {
            return Err(IngestError::MalformedLine {
                file: file_label(&nlab_path),
                line: raw.len() + 1,
                detail: format!("{} node labels for {} nodes", raw.len(), num_nodes_total),
            });
        }
        Some(contiguous_remap(&raw))
    } else {
        None
    };

    let raw_edge_labels = if elab_path.exists() { Some(read_int_column(&elab_path)?) } else { None };

    // undirected edge sets per graph, orientations merged
    let a_file = file_label(&a_path);
    let mut edge_sets: Vec<BTreeMap<(u32, u32), i64>> =
        vec![BTreeMap::new(); num_graphs];
    let mut arc_count = 0usize;
    for (idx, line) in open_required(&a_path)?.lines().enumerate() {
        let line = line?;
        let trimmed = line.trim();
        if trimmed.is_empty() {
            continue;
        }
        let malformed = |detail: String| IngestError::MalformedLine {
            file: a_file.clone(),
            line: idx + 1,
            detail,
        };
        let mut fields = trimmed.split(',').map(str::trim);
        let u = fields
            .next()
            .and_then(|s| s.parse::<usize>().ok())
            .ok_or_else(|| malformed(format!("bad edge pair {trimmed:?}")))?;
        let v = fields
            .next()
            .and_then(|s| s.parse::<usize>().ok())
            .ok_or_else(|| malformed(format!("bad edge pair {trimmed:?}")))?;
        if fields.next().is_some() {
            return Err(malformed(format!("more than two fields in {trimmed:?}")));
        }
        if u < 1 || u > num_nodes_total || v < 1 || v > num_nodes_total {
            return Err(malformed(format!("node id out of range in {trimmed:?}")));
        }
        if u == v {
            return Err(malformed(format!("self-loop on global node {u}")));
        }
        let (gu, gv) = (graph_of[u - 1], graph_of[v - 1]);
        if gu != gv {
            return Err(malformed(format!(
                "edge {u} -> {v} crosses graphs {} and {}",
                gu + 1,
                gv + 1
            )));
        }
        let (a, b) = (local_id[u - 1], local_id[v - 1]);
        let key = (a.min(b), a.max(b));
        let label = raw_edge_labels.as_ref().map_or(0, |l| {
            l.get(arc_count).copied().unwrap_or(0)
        });
        edge_sets[gu].entry(key).or_insert(label);
        arc_count += 1;
    }
    if let Some(raw) = &raw_edge_labels {
        if raw.len() != arc_count {
            return Err(IngestError::MalformedLine {
                file: file_label(&elab_path),
                line: raw.len().min(arc_count) + 1,
                detail: format!("{} edge labels for {} edge lines", raw.len(), arc_count),
            });
        }
    }

    // remap edge labels over the merged edges only
    let edge_label_remap = raw_edge_labels.as_ref().map(|_| {
        let raw: Vec<i64> =
            edge_sets.iter().flat_map(|s| s.values().copied()).collect();
        contiguous_remap(&raw)
    });

    let mut graphs = Vec::with_capacity(num_graphs);
    let mut edge_cursor = 0usize;
    for (g, edges) in edge_sets.iter().enumerate() {
        let pairs: Vec<(u32, u32)> = edges.keys().copied().collect();
        let mut graph = Graph::from_edge_list(graph_sizes[g], &pairs)?;
        if let Some((ref mapped, _)) = node_labels {
            let mut labels_g = vec![0usize; graph_sizes[g]];
            for (node, &owner) in graph_of.iter().enumerate() {
                if owner == g {
                    labels_g[local_id[node] as usize] = mapped[node];
                }
            }
            graph = graph.with_node_labels(labels_g)?;
        }
        if let Some((ref mapped, _)) = edge_label_remap {
            let labels_g: Vec<usize> =
                mapped[edge_cursor..edge_cursor + pairs.len()].to_vec();
            graph = graph.with_edge_labels(labels_g)?;
        }
        edge_cursor += pairs.len();
        graphs.push(graph);
    }

    Ok(Dataset {
        name: name.to_string(),
        graphs,
        labels,
        class_count,
        node_label_count: node_labels.map(|(_, count)| count),
        edge_label_count: edge_label_remap.map(|(_, count)| count),
    })
}

/// Writes a dataset back out in the same layout (both edge orientations).
pub fn export_tudataset(d: &Dataset, dir: &Path) -> Result<(), IngestError> {
    let base = dir.join(&d.name);
    std::fs::create_dir_all(&base)?;
    let name = &d.name;
    let mut a = BufWriter::new(File::create(base.join(format!("{name}_A.txt")))?);
    let mut ind = BufWriter::new(File::create(base.join(format!("{name}_graph_indicator.txt")))?);
    let mut glab = BufWriter::new(File::create(base.join(format!("{name}_graph_labels.txt")))?);
    let has_node_labels = d.node_label_count.is_some();
    let has_edge_labels = d.edge_label_count.is_some();
    let mut nlab = if has_node_labels {
        Some(BufWriter::new(File::create(base.join(format!("{name}_node_labels.txt")))?))
    } else {
        None
    };
    let mut elab = if has_edge_labels {
        Some(BufWriter::new(File::create(base.join(format!("{name}_edge_labels.txt")))?))
    } else {
        None
    };

    let mut base_id = 1usize; // global ids are 1-indexed
    for (g, graph) in d.graphs.iter().enumerate() {
        writeln!(glab, "{}", d.labels[g])?;
        for v in 0..graph.num_nodes() {
            writeln!(ind, "{}", g + 1)?;
            if let (Some(w), Some(labels)) = (nlab.as_mut(), graph.node_labels()) {
                writeln!(w, "{}", labels[v])?;
            }
        }
        let mut arcs: Vec<(usize, usize, usize)> = Vec::with_capacity(graph.num_edges() * 2);
        for (idx, &(u, v)) in graph.edges().iter().enumerate() {
            let label = graph.edge_labels().map_or(0, |l| l[idx]);
            arcs.push((base_id + u as usize, base_id + v as usize, label));
            arcs.push((base_id + v as usize, base_id + u as usize, label));
        }
        arcs.sort_unstable();
        for (u, v, label) in arcs {
            writeln!(a, "{u}, {v}")?;
            if let Some(w) = elab.as_mut() {
                writeln!(w, "{label}")?;
            }
        }
        base_id += graph.num_nodes();
    }
    Ok(())
}

/// How to initialize node features when a dataset ships without them.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FeaturePolicy {
    NodeLabelOneHot,
    DegreeOneHot { cap: usize },
    Constant,
}

/// The default rule: label one-hot when labels exist, else capped degree
/// one-hot.
pub fn default_policy(d: &Dataset) -> FeaturePolicy {
    if d.node_label_count.is_some() {
        FeaturePolicy::NodeLabelOneHot
    } else {
        FeaturePolicy::DegreeOneHot { cap: features::DEFAULT_DEGREE_CAP }
    }
}

/// Returns a copy of the dataset with a uniform-dimension feature matrix on
/// every graph.
pub fn init_features(d: &Dataset, policy: FeaturePolicy) -> Result<Dataset, IngestError> {
    let mut out = d.clone();
    match policy {
        FeaturePolicy::NodeLabelOneHot => {
            let classes = d
                .node_label_count
                .ok_or_else(|| IngestError::MissingNodeLabels { name: d.name.clone() })?;
            for g in &mut out.graphs {
                let labels = g.node_labels().expect("label count implies labels").to_vec();
                *g = g.clone().with_features(features::label_onehot(&labels, classes))?;
            }
        }
        FeaturePolicy::DegreeOneHot { cap } => {
            for g in &mut out.graphs {
                *g = g.clone().with_features(features::degree_onehot(g, cap))?;
            }
        }
        FeaturePolicy::Constant => {
            for g in &mut out.graphs {
                *g = g.clone().with_features(features::constant(g.num_nodes()))?;
            }
        }
    }
    Ok(out)
}
