//! Line-oriented view files for downstream consumers.
//!
//! One directory per dataset/strategy holds `original.txt`, `coarsened.txt`
//! and `line_graph.txt`. Each file is a sequence of records separated by a
//! blank line; a record is
//!
//! ```text
//! graph <id> label <y> nodes <n> edges <m>
//! e <u> <v>              (m lines, canonical edge order)
//! p <kind> <members...>  (coarsened records: one line per supernode)
//! f <node> <values...>   (one line per node when features exist)
//! ```
//!
//! UTF-8, LF newlines. The `p` lines double as the node -> supernode
//! mapping: the i-th line describes supernode i. Line-graph records carry no
//! `p` lines; line-node i originates from the i-th `e` line of the
//! coarsened record, so origins are recoverable without extra syntax.

use std::fmt::Write as _;
use std::str::FromStr;

use coarsen_core::graph::Graph;
use coarsen_core::partition::{Partition, PartitionKind, PartitionSet};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum ViewsError {
    #[error("line {line}: {detail}")]
    Parse { line: usize, detail: String },
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

/// One graph record as written to a view file.
#[derive(Debug, Clone, PartialEq)]
pub struct ViewRecord {
    pub id: usize,
    pub label: usize,
    pub num_nodes: usize,
    pub edges: Vec<(usize, usize)>,
    pub partitions: Vec<(PartitionKind, Vec<usize>)>,
    pub features: Option<Vec<Vec<f64>>>,
}

impl ViewRecord {
    pub fn from_graph(id: usize, label: usize, g: &Graph) -> Self {
        ViewRecord {
            id,
            label,
            num_nodes: g.num_nodes(),
            edges: g.edges().iter().map(|&(u, v)| (u as usize, v as usize)).collect(),
            partitions: Vec::new(),
            features: g
                .features()
                .map(|f| (0..f.rows()).map(|i| f.row(i).to_vec()).collect()),
        }
    }

    pub fn with_partitions(mut self, pset: &PartitionSet) -> Self {
        self.partitions = pset
            .partitions()
            .iter()
            .map(|p| (p.kind, p.members.iter().map(|&m| m as usize).collect()))
            .collect();
        self
    }

    pub fn with_feature_rows(mut self, rows: Vec<Vec<f64>>) -> Self {
        self.features = Some(rows);
        self
    }

    /// Reconstructs the graph described by this record.
    pub fn to_graph(&self) -> Result<Graph, coarsen_core::graph::GraphError> {
        let pairs: Vec<(u32, u32)> =
            self.edges.iter().map(|&(u, v)| (u as u32, v as u32)).collect();
        let mut g = Graph::from_edge_list(self.num_nodes, &pairs)?;
        if let Some(rows) = &self.features {
            g = g.with_features(coarsen_core::graph::FeatureMatrix::from_rows(rows)?)?;
        }
        Ok(g)
    }

    /// Partition lines interpreted back into a cover.
    pub fn to_partition_set(
        &self,
        source_nodes: usize,
    ) -> Result<PartitionSet, coarsen_core::partition::PartitionError> {
        let partitions = self
            .partitions
            .iter()
            .map(|(kind, members)| Partition {
                members: members.iter().map(|&m| m as u32).collect(),
                kind: *kind,
            })
            .collect();
        PartitionSet::new(source_nodes, partitions)
    }
}

pub fn write_record(out: &mut String, rec: &ViewRecord) {
    let _ = writeln!(
        out,
        "graph {} label {} nodes {} edges {}",
        rec.id,
        rec.label,
        rec.num_nodes,
        rec.edges.len()
    );
    for &(u, v) in &rec.edges {
        let _ = writeln!(out, "e {u} {v}");
    }
    for (kind, members) in &rec.partitions {
        let _ = write!(out, "p {kind}");
        for m in members {
            let _ = write!(out, " {m}");
        }
        let _ = writeln!(out);
    }
    if let Some(rows) = &rec.features {
        for (node, row) in rows.iter().enumerate() {
            let _ = write!(out, "f {node}");
            for v in row {
                let _ = write!(out, " {v}");
            }
            let _ = writeln!(out);
        }
    }
    let _ = writeln!(out);
}

fn parse_kind(token: &str, line: usize) -> Result<PartitionKind, ViewsError> {
    match token {
        "clique" => Ok(PartitionKind::Clique),
        "loop" => Ok(PartitionKind::Loop),
        "singleton" => Ok(PartitionKind::Singleton),
        "arbitrary" => Ok(PartitionKind::Arbitrary),
        other => Err(ViewsError::Parse { line, detail: format!("unknown partition kind {other:?}") }),
    }
}

fn parse_nums<T: FromStr>(tokens: &[&str], line: usize) -> Result<Vec<T>, ViewsError> {
    tokens
        .iter()
        .map(|t| {
            t.parse::<T>().map_err(|_| ViewsError::Parse {
                line,
                detail: format!("bad number {t:?}"),
            })
        })
        .collect()
}

/// Parses a whole view file back into records.
pub fn parse_records(text: &str) -> Result<Vec<ViewRecord>, ViewsError> {
    let mut records = Vec::new();
    let mut current: Option<ViewRecord> = None;
    let mut feature_rows: Vec<(usize, Vec<f64>)> = Vec::new();

    let flush = |current: &mut Option<ViewRecord>,
                 feature_rows: &mut Vec<(usize, Vec<f64>)>,
                 records: &mut Vec<ViewRecord>,
                 line: usize|
     -> Result<(), ViewsError> {
        if let Some(mut rec) = current.take() {
            if !feature_rows.is_empty() {
                if feature_rows.len() != rec.num_nodes {
                    return Err(ViewsError::Parse {
                        line,
                        detail: format!(
                            "{} feature rows for {} nodes",
                            feature_rows.len(),
                            rec.num_nodes
                        ),
                    });
                }
                let mut rows = vec![Vec::new(); rec.num_nodes];
                for (node, row) in feature_rows.drain(..) {
                    if node >= rec.num_nodes {
                        return Err(ViewsError::Parse {
                            line,
                            detail: format!("feature row for node {node} out of range"),
                        });
                    }
                    rows[node] = row;
                }
                rec.features = Some(rows);
            }
            records.push(rec);
        }
        Ok(())
    };

    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.trim_end();
        if line.is_empty() {
            flush(&mut current, &mut feature_rows, &mut records, line_no)?;
            continue;
        }
        let tokens: Vec<&str> = line.split_whitespace().collect();
        match tokens[0] {
            "graph" => {
                flush(&mut current, &mut feature_rows, &mut records, line_no)?;
                if tokens.len() != 8 || tokens[2] != "label" || tokens[4] != "nodes" || tokens[6] != "edges" {
                    return Err(ViewsError::Parse {
                        line: line_no,
                        detail: format!("bad header {line:?}"),
                    });
                }
                let nums = parse_nums::<usize>(&[tokens[1], tokens[3], tokens[5], tokens[7]], line_no)?;
                current = Some(ViewRecord {
                    id: nums[0],
                    label: nums[1],
                    num_nodes: nums[2],
                    edges: Vec::with_capacity(nums[3]),
                    partitions: Vec::new(),
                    features: None,
                });
            }
            "e" => {
                let rec = current.as_mut().ok_or_else(|| ViewsError::Parse {
                    line: line_no,
                    detail: "edge line outside a record".into(),
                })?;
                let nums = parse_nums::<usize>(&tokens[1..], line_no)?;
                if nums.len() != 2 {
                    return Err(ViewsError::Parse {
                        line: line_no,
                        detail: format!("edge line needs two endpoints, got {}", nums.len()),
                    });
                }
                rec.edges.push((nums[0], nums[1]));
            }
            "p" => {
                let rec = current.as_mut().ok_or_else(|| ViewsError::Parse {
                    line: line_no,
                    detail: "partition line outside a record".into(),
                })?;
                if tokens.len() < 3 {
                    return Err(ViewsError::Parse {
                        line: line_no,
                        detail: "partition line needs a kind and members".into(),
                    });
                }
                let kind = parse_kind(tokens[1], line_no)?;
                let members = parse_nums::<usize>(&tokens[2..], line_no)?;
                rec.partitions.push((kind, members));
            }
            "f" => {
                if current.is_none() {
                    return Err(ViewsError::Parse {
                        line: line_no,
                        detail: "feature line outside a record".into(),
                    });
                }
                let node = parse_nums::<usize>(&tokens[1..2], line_no)?[0];
                let row = parse_nums::<f64>(&tokens[2..], line_no)?;
                feature_rows.push((node, row));
            }
            other => {
                return Err(ViewsError::Parse {
                    line: line_no,
                    detail: format!("unknown record line {other:?}"),
                })
            }
        }
    }
    let last = text.lines().count();
    flush(&mut current, &mut feature_rows, &mut records, last)?;
    Ok(records)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn record_round_trips() {
        let g = Graph::from_edge_list(3, &[(0, 1), (1, 2)]).unwrap();
        let rec = ViewRecord::from_graph(7, 1, &g)
            .with_feature_rows(vec![vec![1.0, 0.5], vec![0.0, 2.0], vec![3.0, 0.25]]);
        let mut text = String::new();
        write_record(&mut text, &rec);
        let parsed = parse_records(&text).unwrap();
        assert_eq!(parsed, vec![rec]);
    }

    #[test]
    fn partition_lines_round_trip() {
        let g = Graph::from_edge_list(4, &[(0, 1), (0, 2), (1, 2), (2, 3)]).unwrap();
        let pset = PartitionSet::new(
            4,
            vec![
                Partition { members: vec![0, 1, 2], kind: PartitionKind::Clique },
                Partition::singleton(3),
            ],
        )
        .unwrap();
        let rec = ViewRecord::from_graph(0, 0, &g).with_partitions(&pset);
        let mut text = String::new();
        write_record(&mut text, &rec);
        let parsed = parse_records(&text).unwrap();
        assert_eq!(parsed[0].to_partition_set(4).unwrap(), pset);
    }

    #[test]
    fn parse_reports_line_numbers() {
        let err = parse_records("graph 0 label 0 nodes 1 edges 0\nq zzz\n").unwrap_err();
        match err {
            ViewsError::Parse { line, .. } => assert_eq!(line, 2),
            other => panic!("unexpected {other:?}"),
        }
    }
}
