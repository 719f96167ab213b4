//! The `linkgraph` command-line interface.
//!
//! Subcommands mirror the library pipeline: `ingest`, `graph stats`,
//! `global`, `local`, `ccd`, `percolate`, and `search-eval`. Every emitted
//! file starts with a metadata header echoing the configuration; under
//! `--deterministic` the header carries no timestamp, making reruns with the
//! same configuration byte-identical at any `--threads` setting.

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::str::FromStr;

use anyhow::{Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::corpus::{build_graph, Corpus, GraphVariant};
use crate::global::global_report;
use crate::local::{ccd, compute_all_features, compute_feature, Feature, PowerIterationOpts};
use crate::output::{format_optional, format_real, Metadata};
use crate::percolation::{isolate_run, IsolationSchedule};
use crate::search::{run_keyword_suite, PrCurve, TokenizedCorpus, BUCKET_COUNT};

#[derive(Parser)]
#[command(
    name = "linkgraph",
    version,
    about = "Directed-graph analytics for hyperlink corpora",
    propagate_version = true
)]
pub struct Cli {
    /// Worker threads (default: available parallelism); results never depend
    /// on this setting
    #[arg(long, global = true)]
    threads: Option<usize>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Parse a corpus and report ingest and graph-construction counts
    Ingest(IngestArgs),
    /// Graph-level utilities
    Graph(GraphArgs),
    /// Global features of one graph variant
    Global(GlobalArgs),
    /// Per-node values of one local feature
    Local(LocalArgs),
    /// Complementary cumulative distribution of one local feature
    Ccd(CcdArgs),
    /// Node-isolation experiment tracking the giant component
    Percolate(PercolateArgs),
    /// Keyword Precision-Recall evaluation across all ten features
    SearchEval(SearchEvalArgs),
}

#[derive(Args)]
struct CorpusOpts {
    /// Corpus file: one JSON page record per line
    #[arg(long)]
    corpus: PathBuf,
    /// Which link kinds become edges
    #[arg(long, default_value = "all")]
    variant: GraphVariant,
}

#[derive(Args)]
struct OutputOpts {
    /// Output format
    #[arg(long, value_enum, default_value_t = Format::Csv)]
    format: Format,
    /// Output path (default: stdout)
    #[arg(long)]
    output: Option<PathBuf>,
    /// Omit the timestamp so identical configurations emit identical bytes
    #[arg(long)]
    deterministic: bool,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Csv,
    Json,
}

#[derive(Args)]
struct IterationArgs {
    /// Convergence tolerance for hub/authority/page-rank iterations
    #[arg(long, default_value_t = 1e-12)]
    tol: f64,
    /// Iteration budget before giving up
    #[arg(long, default_value_t = 100_000)]
    max_iters: usize,
}

impl IterationArgs {
    fn opts(&self) -> PowerIterationOpts {
        PowerIterationOpts {
            tolerance: self.tol,
            max_iterations: self.max_iters,
        }
    }

    fn annotate(&self, meta: &mut Metadata) {
        meta.push("tol", format_real(self.tol));
        meta.push("max_iters", self.max_iters);
        if self.tol > 1e-16 {
            meta.push(
                "note",
                format!(
                    "iterative scores converge at tolerance {} rather than 1e-16, \
                     which sits at double-precision round-off",
                    format_real(self.tol)
                ),
            );
        }
    }
}

#[derive(Args)]
struct IngestArgs {
    #[command(flatten)]
    corpus: CorpusOpts,
    #[command(flatten)]
    out: OutputOpts,
}

#[derive(Args)]
struct GraphArgs {
    #[command(subcommand)]
    command: GraphCommand,
}

#[derive(Subcommand)]
enum GraphCommand {
    /// Node and edge counts for every graph variant
    Stats(StatsArgs),
}

#[derive(Args)]
struct StatsArgs {
    /// Corpus file: one JSON page record per line
    #[arg(long)]
    corpus: PathBuf,
    #[command(flatten)]
    out: OutputOpts,
}

#[derive(Args)]
struct GlobalArgs {
    #[command(flatten)]
    corpus: CorpusOpts,
    #[command(flatten)]
    out: OutputOpts,
}

#[derive(Args)]
struct LocalArgs {
    #[command(flatten)]
    corpus: CorpusOpts,
    /// Feature to evaluate
    #[arg(long)]
    feature: Feature,
    #[command(flatten)]
    iteration: IterationArgs,
    #[command(flatten)]
    out: OutputOpts,
}

#[derive(Args)]
struct CcdArgs {
    #[command(flatten)]
    corpus: CorpusOpts,
    /// Feature whose distribution to evaluate
    #[arg(long)]
    feature: Feature,
    #[command(flatten)]
    iteration: IterationArgs,
    #[command(flatten)]
    out: OutputOpts,
}

#[derive(Args)]
struct PercolateArgs {
    #[command(flatten)]
    corpus: CorpusOpts,
    /// `random`, or a feature name for targeted isolation
    #[arg(long)]
    schedule: Schedule,
    /// Independent trials averaged for the random schedule
    #[arg(long, default_value_t = 10)]
    trials: usize,
    /// Seed for the random schedule
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Recompute targeted feature values every K isolations instead of once
    /// on the intact graph (expensive; meant for small graphs)
    #[arg(long, value_name = "K")]
    recompute_every: Option<usize>,
    #[command(flatten)]
    iteration: IterationArgs,
    #[command(flatten)]
    out: OutputOpts,
}

#[derive(Clone, Copy)]
enum Schedule {
    Random,
    Targeted(Feature),
}

impl FromStr for Schedule {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        if s == "random" {
            Ok(Schedule::Random)
        } else {
            Feature::from_str(s)
                .map(Schedule::Targeted)
                .map_err(|e| format!("{e}, or \"random\""))
        }
    }
}

#[derive(Args)]
struct SearchEvalArgs {
    #[command(flatten)]
    corpus: CorpusOpts,
    /// Keyword file: one keyword per line, in rank order
    #[arg(long)]
    keywords: PathBuf,
    /// Evaluate at most this many surviving keywords
    #[arg(long, default_value_t = 100)]
    limit: usize,
    /// Where to write the JSON drop report (default: next to --output, or
    /// stderr when writing the curves to stdout)
    #[arg(long)]
    drop_report: Option<PathBuf>,
    #[command(flatten)]
    iteration: IterationArgs,
    #[command(flatten)]
    out: OutputOpts,
}

/// Parses `argv` and runs the selected subcommand. Returns the process exit
/// code: 0 on success, 1 on any runtime error, 2 on usage errors.
pub fn run_cli<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(err) => {
            use clap::error::ErrorKind;
            let code = match err.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 2,
            };
            let _ = err.print();
            return code;
        }
    };

    let outcome = match cli.threads {
        Some(threads) => rayon::ThreadPoolBuilder::new()
            .num_threads(threads)
            .build()
            .context("building thread pool")
            .and_then(|pool| pool.install(|| dispatch(cli.command))),
        None => dispatch(cli.command),
    };

    match outcome {
        Ok(()) => 0,
        Err(err) => {
            eprintln!("error: {err:#}");
            1
        }
    }
}

/// Entry point for the `linkgraph` binary.
pub fn main_from_env() -> i32 {
    run_cli(std::env::args_os())
}

fn dispatch(command: Command) -> Result<()> {
    match command {
        Command::Ingest(args) => run_ingest(args),
        Command::Graph(args) => match args.command {
            GraphCommand::Stats(args) => run_graph_stats(args),
        },
        Command::Global(args) => run_global(args),
        Command::Local(args) => run_local(args),
        Command::Ccd(args) => run_ccd(args),
        Command::Percolate(args) => run_percolate(args),
        Command::SearchEval(args) => run_search_eval(args),
    }
}

fn load_corpus(path: &Path) -> Result<Corpus> {
    Corpus::from_path(path).with_context(|| format!("reading corpus {}", path.display()))
}

fn corpus_meta(command: &str, opts: &CorpusOpts, out: &OutputOpts) -> Metadata {
    let mut meta = Metadata::new(command);
    meta.push("corpus", opts.corpus.display());
    meta.push("variant", opts.variant);
    meta.push_timestamp(out.deterministic);
    meta
}

fn write_output(out: &OutputOpts, content: &str) -> Result<()> {
    match &out.output {
        Some(path) => {
            std::fs::write(path, content).with_context(|| format!("writing {}", path.display()))
        }
        None => std::io::stdout()
            .write_all(content.as_bytes())
            .context("writing stdout"),
    }
}

fn render_json(meta: &Metadata, body: Value) -> String {
    let mut document = serde_json::Map::new();
    document.insert("meta".to_string(), meta.json_object());
    if let Value::Object(entries) = body {
        document.extend(entries);
    }
    let mut text =
        serde_json::to_string_pretty(&Value::Object(document)).expect("JSON output serializes");
    text.push('\n');
    text
}

fn run_ingest(args: IngestArgs) -> Result<()> {
    let corpus = load_corpus(&args.corpus.corpus)?;
    let graph = build_graph(&corpus, args.corpus.variant);
    let meta = corpus_meta("ingest", &args.corpus, &args.out);
    let content = match args.out.format {
        Format::Csv => format!(
            "{}pages,dangling_links_dropped,nodes,edges\n{},{},{},{}\n",
            meta.csv_header(),
            corpus.len(),
            corpus.dropped_dangling_links(),
            graph.node_count(),
            graph.edge_count(),
        ),
        Format::Json => render_json(
            &meta,
            json!({
                "pages": corpus.len(),
                "dangling_links_dropped": corpus.dropped_dangling_links(),
                "nodes": graph.node_count(),
                "edges": graph.edge_count(),
            }),
        ),
    };
    write_output(&args.out, &content)
}

fn run_graph_stats(args: StatsArgs) -> Result<()> {
    let corpus = load_corpus(&args.corpus)?;
    let mut meta = Metadata::new("graph stats");
    meta.push("corpus", args.corpus.display());
    meta.push_timestamp(args.out.deterministic);
    let variants = [GraphVariant::AllLinks, GraphVariant::SeeAlsoOnly];
    let content = match args.out.format {
        Format::Csv => {
            let mut text = format!("{}variant,nodes,edges\n", meta.csv_header());
            for variant in variants {
                let g = build_graph(&corpus, variant);
                text.push_str(&format!(
                    "{},{},{}\n",
                    variant,
                    g.node_count(),
                    g.edge_count()
                ));
            }
            text
        }
        Format::Json => {
            let rows: Vec<Value> = variants
                .iter()
                .map(|&variant| {
                    let g = build_graph(&corpus, variant);
                    json!({
                        "variant": variant.as_str(),
                        "nodes": g.node_count(),
                        "edges": g.edge_count(),
                    })
                })
                .collect();
            render_json(&meta, json!({ "variants": rows }))
        }
    };
    write_output(&args.out, &content)
}

fn run_global(args: GlobalArgs) -> Result<()> {
    let corpus = load_corpus(&args.corpus.corpus)?;
    let graph = build_graph(&corpus, args.corpus.variant);
    let report = global_report(&graph)?;
    let meta = corpus_meta("global", &args.corpus, &args.out);
    let content = match args.out.format {
        Format::Csv => {
            let header = "nodes,edges,mean_in_degree,mean_degree,antiparallel_fraction,\
                          gscc_fraction,avg_distance,finite_pair_count,clustering,\
                          triangle_count,path_triple_count,random_clustering,\
                          degree_second_moment,assortativity_out_in,assortativity_in_out,\
                          assortativity_out_out,assortativity_in_in";
            let row = [
                report.nodes.to_string(),
                report.edges.to_string(),
                format_real(report.mean_in_degree),
                format_real(report.mean_degree),
                format_optional(report.antiparallel_fraction),
                format_real(report.gscc_fraction),
                format_optional(report.avg_distance),
                report.finite_pair_count.to_string(),
                format_real(report.clustering),
                report.triangle_count.to_string(),
                report.path_triple_count.to_string(),
                format_optional(report.random_clustering),
                format_real(report.degree_second_moment),
                format_optional(report.assortativity_out_in),
                format_optional(report.assortativity_in_out),
                format_optional(report.assortativity_out_out),
                format_optional(report.assortativity_in_in),
            ]
            .join(",");
            format!("{}{header}\n{row}\n", meta.csv_header())
        }
        Format::Json => render_json(
            &meta,
            json!({
                "nodes": report.nodes,
                "edges": report.edges,
                "mean_in_degree": report.mean_in_degree,
                "mean_degree": report.mean_degree,
                "antiparallel_fraction": report.antiparallel_fraction,
                "gscc_fraction": report.gscc_fraction,
                "avg_distance": report.avg_distance,
                "finite_pair_count": report.finite_pair_count,
                "clustering": report.clustering,
                "triangle_count": report.triangle_count,
                "path_triple_count": report.path_triple_count,
                "random_clustering": report.random_clustering,
                "degree_second_moment": report.degree_second_moment,
                "assortativity_out_in": report.assortativity_out_in,
                "assortativity_in_out": report.assortativity_in_out,
                "assortativity_out_out": report.assortativity_out_out,
                "assortativity_in_in": report.assortativity_in_in,
            }),
        ),
    };
    write_output(&args.out, &content)
}

fn run_local(args: LocalArgs) -> Result<()> {
    let corpus = load_corpus(&args.corpus.corpus)?;
    let graph = build_graph(&corpus, args.corpus.variant);
    let vector = compute_feature(&graph, args.feature, &args.iteration.opts())?;
    let mut meta = corpus_meta("local", &args.corpus, &args.out);
    meta.push("feature", args.feature);
    args.iteration.annotate(&mut meta);
    let content = match args.out.format {
        Format::Csv => {
            let mut text = format!("{}page_id,value\n", meta.csv_header());
            for (i, value) in vector.values.iter().enumerate() {
                text.push_str(&format!("{},{}\n", graph.label(i), format_real(*value)));
            }
            text
        }
        Format::Json => {
            let rows: Vec<Value> = vector
                .values
                .iter()
                .enumerate()
                .map(|(i, value)| json!({ "page_id": graph.label(i), "value": value }))
                .collect();
            render_json(
                &meta,
                json!({ "feature": args.feature.name(), "values": rows }),
            )
        }
    };
    write_output(&args.out, &content)
}

fn run_ccd(args: CcdArgs) -> Result<()> {
    let corpus = load_corpus(&args.corpus.corpus)?;
    let graph = build_graph(&corpus, args.corpus.variant);
    let vector = compute_feature(&graph, args.feature, &args.iteration.opts())?;
    let table = ccd(&vector.values);
    let mut meta = corpus_meta("ccd", &args.corpus, &args.out);
    meta.push("feature", args.feature);
    args.iteration.annotate(&mut meta);
    let content = match args.out.format {
        Format::Csv => {
            let mut text = format!("{}z,fraction_above\n", meta.csv_header());
            for (z, fraction) in table.points() {
                text.push_str(&format!("{},{}\n", format_real(z), format_real(fraction)));
            }
            text
        }
        Format::Json => {
            let rows: Vec<Value> = table
                .points()
                .map(|(z, fraction)| json!({ "z": z, "fraction_above": fraction }))
                .collect();
            render_json(
                &meta,
                json!({ "feature": args.feature.name(), "ccd": rows }),
            )
        }
    };
    write_output(&args.out, &content)
}

fn run_percolate(args: PercolateArgs) -> Result<()> {
    let corpus = load_corpus(&args.corpus.corpus)?;
    let graph = build_graph(&corpus, args.corpus.variant);
    let schedule = match args.schedule {
        Schedule::Random => IsolationSchedule::Random {
            seed: args.seed,
            trials: args.trials,
        },
        Schedule::Targeted(feature) => IsolationSchedule::Targeted {
            feature,
            recompute_every: args.recompute_every,
        },
    };
    let trace = isolate_run(&graph, &schedule, &args.iteration.opts())?;

    let mut meta = corpus_meta("percolate", &args.corpus, &args.out);
    meta.push("schedule", schedule.label());
    match &schedule {
        IsolationSchedule::Random { seed, trials } => {
            meta.push("trials", trials);
            meta.push("seed", seed);
        }
        IsolationSchedule::Targeted {
            recompute_every, ..
        } => match recompute_every {
            Some(k) => meta.push("feature_values", format!("recomputed every {k} isolations")),
            None => meta.push("feature_values", "computed once on the intact graph"),
        },
    }
    meta.push("breakdown_fraction", format_real(trace.breakdown_fraction));

    let content = match args.out.format {
        Format::Csv => {
            let mut text = format!("{}isolated_fraction,gscc_fraction\n", meta.csv_header());
            for point in &trace.points {
                text.push_str(&format!(
                    "{},{}\n",
                    format_real(point.isolated_fraction),
                    format_real(point.gscc_fraction)
                ));
            }
            text
        }
        Format::Json => {
            let rows: Vec<Value> = trace
                .points
                .iter()
                .map(|p| {
                    json!({
                        "isolated_count": p.isolated_count,
                        "isolated_fraction": p.isolated_fraction,
                        "gscc_fraction": p.gscc_fraction,
                    })
                })
                .collect();
            render_json(
                &meta,
                json!({ "breakdown_fraction": trace.breakdown_fraction, "trace": rows }),
            )
        }
    };
    write_output(&args.out, &content)
}

fn run_search_eval(args: SearchEvalArgs) -> Result<()> {
    let corpus = load_corpus(&args.corpus.corpus)?;
    let graph = build_graph(&corpus, args.corpus.variant);
    let features = compute_all_features(&graph, &args.iteration.opts())?;
    let tokens = TokenizedCorpus::new(&corpus);
    let keywords = read_keywords(&args.keywords)?;
    let outcome = run_keyword_suite(&tokens, &features, &keywords, args.limit)?;

    let mut meta = corpus_meta("search-eval", &args.corpus, &args.out);
    meta.push("keywords", args.keywords.display());
    meta.push("limit", args.limit);
    meta.push("evaluated", outcome.evaluated.len());
    meta.push("dropped", outcome.dropped.len());
    meta.push(
        "matching",
        "case-insensitive contiguous token sequence over page title and body",
    );
    args.iteration.annotate(&mut meta);

    let content = match args.out.format {
        Format::Csv => {
            let mut text = format!(
                "{}feature,bucket_abscissa,mean_precision,count\n",
                meta.csv_header()
            );
            for (feature, curve) in Feature::ALL.iter().zip(&outcome.curves) {
                push_curve_csv(&mut text, feature, curve);
            }
            text
        }
        Format::Json => {
            let curves: Vec<Value> = Feature::ALL
                .iter()
                .zip(&outcome.curves)
                .map(|(feature, curve)| {
                    let buckets: Vec<Value> = (0..BUCKET_COUNT)
                        .map(|b| {
                            json!({
                                "bucket_abscissa": PrCurve::abscissa(b),
                                "mean_precision": curve.mean(b),
                                "count": curve.count(b),
                            })
                        })
                        .collect();
                    json!({ "feature": feature.name(), "buckets": buckets })
                })
                .collect();
            render_json(&meta, json!({ "curves": curves }))
        }
    };
    write_output(&args.out, &content)?;

    let report = drop_report_json(&outcome);
    match (&args.drop_report, &args.out.output) {
        (Some(path), _) => {
            std::fs::write(path, report).with_context(|| format!("writing {}", path.display()))?
        }
        (None, Some(output)) => {
            let mut path = output.as_os_str().to_owned();
            path.push(".drops.json");
            let path = PathBuf::from(path);
            std::fs::write(&path, report).with_context(|| format!("writing {}", path.display()))?;
        }
        (None, None) => eprintln!("{report}"),
    }
    Ok(())
}

fn push_curve_csv(text: &mut String, feature: &Feature, curve: &PrCurve) {
    for bucket in 0..BUCKET_COUNT {
        text.push_str(&format!(
            "{},{},{},{}\n",
            feature.name(),
            format_real(PrCurve::abscissa(bucket)),
            format_optional(curve.mean(bucket)),
            curve.count(bucket)
        ));
    }
}

fn drop_report_json(outcome: &crate::search::SuiteOutcome) -> String {
    let evaluated: Vec<Value> = outcome
        .evaluated
        .iter()
        .map(|q| json!({ "keyword": q.keyword, "matched": q.matched, "relevant": q.relevant }))
        .collect();
    let dropped: Vec<Value> = outcome
        .dropped
        .iter()
        .map(|q| json!({ "keyword": q.keyword, "matched": q.matched, "reason": q.reason.as_str() }))
        .collect();
    let mut text = serde_json::to_string_pretty(&json!({
        "evaluated": evaluated,
        "dropped": dropped,
    }))
    .expect("drop report serializes");
    text.push('\n');
    text
}

fn read_keywords(path: &Path) -> Result<Vec<String>> {
    let raw = std::fs::read_to_string(path)
        .with_context(|| format!("reading keyword file {}", path.display()))?;
    Ok(raw
        .lines()
        .map(str::trim)
        .filter(|line| !line.is_empty())
        .map(str::to_string)
        .collect())
}
