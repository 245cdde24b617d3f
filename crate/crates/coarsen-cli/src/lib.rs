//! Dataset ingestion, view emission and reporting around `coarsen-core`.

pub mod pipeline;
pub mod report;
pub mod synth;
pub mod tudataset;
pub mod views;

pub use pipeline::{build_views, coarsen_with, GraphViews, LineGraphSource, RunConfig, Strategy};
pub use report::{runtime_report, scale_report, scale_row, RuntimeRow, ScaleReport, ScaleRow};
pub use tudataset::{
    default_policy, export_tudataset, init_features, load_tudataset, Dataset, FeaturePolicy,
    IngestError,
};
