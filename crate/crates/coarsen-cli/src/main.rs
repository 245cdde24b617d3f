use std::fs;
use std::path::PathBuf;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use rayon::prelude::*;

use coarsen_cli::pipeline::{build_views, LineGraphSource, RunConfig, Strategy};
use coarsen_cli::report::{runtime_report, scale_report};
use coarsen_cli::tudataset::{default_policy, init_features, load_tudataset, Dataset, FeaturePolicy};
use coarsen_cli::views::{write_record, ViewRecord};
use coarsen_core::lcc::LccConfig;
use coarsen_core::lgc::LineGraphStatus;

#[derive(Parser)]
#[command(name = "coarsen", version, about = "Graph coarsening views and scale/runtime reports")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Emit original, coarsened and line-graph views for every graph.
    Run(RunArgs),
    /// Scale or runtime tables.
    #[command(subcommand)]
    Report(ReportCmd),
}

#[derive(Clone, Copy, ValueEnum)]
enum CliStrategy {
    Lcc,
    Random,
    Neighbor,
}

impl From<CliStrategy> for Strategy {
    fn from(s: CliStrategy) -> Strategy {
        match s {
            CliStrategy::Lcc => Strategy::Lcc,
            CliStrategy::Random => Strategy::Random,
            CliStrategy::Neighbor => Strategy::Neighbor,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum FeatureChoice {
    /// Node-label one-hot when labels exist, else capped degree one-hot.
    Auto,
    NodeLabel,
    Degree,
    Constant,
}

#[derive(Clone, Copy, ValueEnum)]
enum LineOf {
    Coarsened,
    Original,
}

#[derive(Args, Clone)]
struct CommonArgs {
    /// Directory holding TUDataset-format dataset folders.
    #[arg(long)]
    data: PathBuf,
    /// Dataset folder name, e.g. IMDB-BINARY.
    #[arg(long)]
    dataset: String,
    /// Max loop length.
    #[arg(long, default_value_t = 6)]
    delta: usize,
    /// Max hierarchy depth in hops.
    #[arg(long, default_value_t = 1)]
    sigma: usize,
    /// Clique-coverage fraction at or below which the loop pass also runs.
    #[arg(long, default_value_t = 0.0)]
    fallback_threshold: f64,
    /// Seed for the random baseline.
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Group count of the random baseline.
    #[arg(long, default_value_t = 5)]
    groups: usize,
    /// Feature initialization policy.
    #[arg(long, value_enum, default_value_t = FeatureChoice::Auto)]
    features: FeatureChoice,
    /// Degree cap when features=degree (or auto without labels).
    #[arg(long, default_value_t = 64)]
    degree_cap: usize,
}

#[derive(Args)]
struct RunArgs {
    #[command(flatten)]
    common: CommonArgs,
    #[arg(long, value_enum)]
    strategy: CliStrategy,
    /// Which graph the line-graph step converts.
    #[arg(long, value_enum, default_value_t = LineOf::Coarsened)]
    line_graph_of: LineOf,
    /// Output directory; views land in <out>/<dataset>/<strategy>/.
    #[arg(long)]
    out: PathBuf,
}

#[derive(Subcommand)]
enum ReportCmd {
    Scale(ScaleArgs),
    Runtime(RuntimeArgs),
}

#[derive(Args)]
struct ScaleArgs {
    #[command(flatten)]
    common: CommonArgs,
    /// Comma-separated strategy list.
    #[arg(long, default_value = "lcc")]
    strategies: String,
    /// Machine-readable output file (JSON).
    #[arg(long)]
    out: PathBuf,
}

#[derive(Args)]
struct RuntimeArgs {
    #[command(flatten)]
    common: CommonArgs,
    #[arg(long, value_enum, default_value_t = CliStrategy::Lcc)]
    strategy: CliStrategy,
    /// Repetitions; the median is reported.
    #[arg(long, default_value_t = 3)]
    reps: usize,
    /// Machine-readable output file (JSON).
    #[arg(long)]
    out: PathBuf,
}

fn load_prepared(common: &CommonArgs) -> Result<Dataset> {
    let d = load_tudataset(&common.data, &common.dataset)
        .with_context(|| format!("loading dataset {}", common.dataset))?;
    let policy = match common.features {
        FeatureChoice::Auto => default_policy(&d),
        FeatureChoice::NodeLabel => FeaturePolicy::NodeLabelOneHot,
        FeatureChoice::Degree => FeaturePolicy::DegreeOneHot { cap: common.degree_cap },
        FeatureChoice::Constant => FeaturePolicy::Constant,
    };
    Ok(init_features(&d, policy)?)
}

fn run_config(common: &CommonArgs, line_graph_of: LineGraphSource) -> Result<RunConfig> {
    let lcc = LccConfig::new(common.delta, common.sigma)
        .and_then(|c| c.with_loop_fallback_threshold(common.fallback_threshold))
        .map_err(|e| anyhow::anyhow!("{e}"))?;
    Ok(RunConfig { lcc, seed: common.seed, random_groups: common.groups, line_graph_of })
}

fn cmd_run(args: &RunArgs) -> Result<()> {
    let strategy: Strategy = args.strategy.into();
    let line_of = match args.line_graph_of {
        LineOf::Coarsened => LineGraphSource::Coarsened,
        LineOf::Original => LineGraphSource::Original,
    };
    let cfg = run_config(&args.common, line_of)?;
    let dataset = load_prepared(&args.common)?;

    let records: Vec<(String, String, String, bool)> = dataset
        .graphs
        .par_iter()
        .enumerate()
        .map(|(idx, g)| {
            let label = dataset.labels[idx];
            let views = build_views(g, strategy, &cfg);

            let mut original = String::new();
            write_record(&mut original, &ViewRecord::from_graph(idx, label, g));

            let mut coarse_rec = ViewRecord::from_graph(idx, label, &views.coarse.super_graph)
                .with_partitions(&views.pset);
            if let Some(f) = &views.coarse.features {
                coarse_rec =
                    coarse_rec.with_feature_rows((0..f.rows()).map(|i| f.row(i).to_vec()).collect());
            }
            let mut coarsened = String::new();
            write_record(&mut coarsened, &coarse_rec);

            let mut line_rec = ViewRecord::from_graph(idx, label, &views.line.graph);
            if let Some(f) = &views.line.features {
                line_rec =
                    line_rec.with_feature_rows((0..f.rows()).map(|i| f.row(i).to_vec()).collect());
            }
            let mut line = String::new();
            write_record(&mut line, &line_rec);

            (original, coarsened, line, views.line_status == LineGraphStatus::EmptyEdgeSet)
        })
        .collect();

    let out_dir = args.out.join(&dataset.name).join(strategy.as_str());
    fs::create_dir_all(&out_dir)?;
    let mut originals = String::new();
    let mut coarsened = String::new();
    let mut lines = String::new();
    let mut empty_line_views = 0usize;
    for (o, c, l, empty) in &records {
        originals.push_str(o);
        coarsened.push_str(c);
        lines.push_str(l);
        empty_line_views += usize::from(*empty);
    }
    fs::write(out_dir.join("original.txt"), originals)?;
    fs::write(out_dir.join("coarsened.txt"), coarsened)?;
    fs::write(out_dir.join("line_graph.txt"), lines)?;

    println!(
        "wrote {} view triples to {} ({} empty line-graph views)",
        records.len(),
        out_dir.display(),
        empty_line_views
    );
    Ok(())
}

fn cmd_scale(args: &ScaleArgs) -> Result<()> {
    let cfg = run_config(&args.common, LineGraphSource::Coarsened)?;
    let dataset = load_prepared(&args.common)?;
    let strategies: Vec<Strategy> = args
        .strategies
        .split(',')
        .map(|s| s.trim().parse().map_err(|e: String| anyhow::anyhow!(e)))
        .collect::<Result<_>>()?;
    if strategies.is_empty() {
        bail!("no strategies given");
    }
    let report = scale_report(&dataset, &strategies, &cfg);
    print!("{}", report.text_table());
    if let Some(parent) = args.out.parent() {
        if !parent.as_os_str().is_empty() {
            fs::create_dir_all(parent)?;
        }
    }
    fs::write(&args.out, serde_json::to_string_pretty(&report)?)?;
    println!("report written to {}", args.out.display());
    Ok(())
}

fn cmd_runtime(args: &RuntimeArgs) -> Result<()> {
    if args.reps < 1 {
        bail!("--reps must be at least 1");
    }
    let cfg = run_config(&args.common, LineGraphSource::Coarsened)?;
    let dataset = load_prepared(&args.common)?;
    let row = runtime_report(&dataset, args.strategy.into(), &cfg, args.reps);
    println!("{}", row.text_line());
    if let Some(parent) = args.out.parent() {
        if !parent.as_os_str().is_empty() {
            fs::create_dir_all(parent)?;
        }
    }
    fs::write(&args.out, serde_json::to_string_pretty(&row)?)?;
    println!("report written to {}", args.out.display());
    Ok(())
}

fn main() -> Result<()> {
    // COARSEN_THREADS caps graph-level parallelism for view emission
    if let Ok(threads) = std::env::var("COARSEN_THREADS") {
        let threads: usize = threads.parse().context("COARSEN_THREADS must be an integer")?;
        rayon::ThreadPoolBuilder::new().num_threads(threads).build_global().ok();
    }
    let cli = Cli::parse();
    match &cli.cmd {
        Cmd::Run(args) => cmd_run(args),
        Cmd::Report(ReportCmd::Scale(args)) => cmd_scale(args),
        Cmd::Report(ReportCmd::Runtime(args)) => cmd_runtime(args),
    }
}
