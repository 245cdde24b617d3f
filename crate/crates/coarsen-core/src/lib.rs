//! Structure-preserving graph reduction: loop/clique coarsening (LCC), line
//! graph conversion (LGC), partition-matrix algebra and reference baselines.
//!
//! The crate is `no_std` (alloc only). Everything is a pure function over
//! immutable inputs; callers may share values across threads freely.
//!
//! The main entry points are [`lcc::coarsen_lcc`], which partitions a graph
//! into cliques, bounded-length loops and singletons and builds the coarse
//! view, and [`lgc::line_graph`], which converts a graph to its edge-central
//! view. [`coarsen::coarsen_by_partition`] is the shared reduction kernel;
//! [`coarsen::matrix_route_coarsen`] recomputes it through explicit indicator
//! matrices and exists purely as a cross-check. [`oracle`] holds naive
//! exhaustive enumerations used to certify outputs in tests.

#![no_std]

extern crate alloc;

pub mod baseline;
pub mod coarsen;
pub mod features;
pub mod graph;
pub mod lcc;
pub mod lgc;
pub mod matrix;
pub mod oracle;
pub mod partition;

pub use coarsen::{coarsen_by_partition, matrix_route_coarsen, CoarsenedGraph};
pub use graph::{FeatureMatrix, Graph, GraphError, NodeId};
pub use lcc::{coarsen_lcc, LccConfig, LccTrace};
pub use lgc::{line_graph, LineGraphView};
pub use matrix::SparseMatrix;
pub use partition::{Partition, PartitionError, PartitionKind, PartitionSet};
