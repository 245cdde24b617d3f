//! Node feature initializers for datasets that ship without features.
//!
//! The default rule: one-hot of the node label when labels exist, otherwise
//! one-hot of the degree capped at [`DEFAULT_DEGREE_CAP`].

use crate::graph::{FeatureMatrix, Graph};

pub const DEFAULT_DEGREE_CAP: usize = 64;

/// One-hot rows for categorical labels in `0..num_classes`.
pub fn label_onehot(labels: &[usize], num_classes: usize) -> FeatureMatrix {
    let mut out = FeatureMatrix::zeros(labels.len(), num_classes);
    for (i, &l) in labels.iter().enumerate() {
        assert!(l < num_classes, "label {l} outside 0..{num_classes}");
        out.row_mut(i)[l] = 1.0;
    }
    out
}

/// One-hot of each node's degree; degrees at or above `cap` share the last
/// slot, so the dimension is exactly `cap`.
pub fn degree_onehot(g: &Graph, cap: usize) -> FeatureMatrix {
    assert!(cap >= 1);
    let mut out = FeatureMatrix::zeros(g.num_nodes(), cap);
    for v in 0..g.num_nodes() {
        out.row_mut(v)[g.degree(v as u32).min(cap - 1)] = 1.0;
    }
    out
}

/// The all-ones single column.
pub fn constant(num_nodes: usize) -> FeatureMatrix {
    let mut out = FeatureMatrix::zeros(num_nodes, 1);
    for i in 0..num_nodes {
        out.row_mut(i)[0] = 1.0;
    }
    out
}
