//! Scale ratios recomputed from the emitted view records must match the
//! in-process report exactly.

use std::path::Path;

use coarsen_cli::pipeline::{build_views, RunConfig, Strategy};
use coarsen_cli::report::scale_row;
use coarsen_cli::tudataset::{default_policy, init_features, load_tudataset};
use coarsen_cli::views::{parse_records, write_record, ViewRecord};

#[test]
fn file_recompute_matches_in_process() {
    let dir = Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/fixtures");
    let d = load_tudataset(&dir, "TINY").unwrap();
    let d = init_features(&d, default_policy(&d)).unwrap();
    let cfg = RunConfig::default();

    for strategy in [Strategy::Lcc, Strategy::Random, Strategy::Neighbor, Strategy::Identity] {
        let row = scale_row(&d, strategy, &cfg);

        // emit the original and coarsened records, re-parse, recompute
        let mut originals = String::new();
        let mut coarsened = String::new();
        for (idx, g) in d.graphs.iter().enumerate() {
            let views = build_views(g, strategy, &cfg);
            write_record(&mut originals, &ViewRecord::from_graph(idx, d.labels[idx], g));
            write_record(
                &mut coarsened,
                &ViewRecord::from_graph(idx, d.labels[idx], &views.coarse.super_graph)
                    .with_partitions(&views.pset),
            );
        }
        let orig_recs = parse_records(&originals).unwrap();
        let coarse_recs = parse_records(&coarsened).unwrap();
        let m = orig_recs.len() as f64;

        let avg = |recs: &[ViewRecord]| {
            let nodes: usize = recs.iter().map(|r| r.num_nodes).sum();
            let edges: usize = recs.iter().map(|r| r.edges.len()).sum();
            (nodes as f64 / m, edges as f64 / m)
        };
        let (v_o, e_o) = avg(&orig_recs);
        let (v_c, e_c) = avg(&coarse_recs);

        assert_eq!(v_o, row.avg_nodes_original, "{strategy}");
        assert_eq!(e_o, row.avg_edges_original, "{strategy}");
        assert_eq!(v_c, row.avg_nodes, "{strategy}");
        assert_eq!(e_c, row.avg_edges, "{strategy}");
        assert_eq!((v_c - v_o) / v_o, row.ratio_nodes, "{strategy}");
        assert_eq!((e_c - e_o) / e_o, row.ratio_edges, "{strategy}");
    }
}
