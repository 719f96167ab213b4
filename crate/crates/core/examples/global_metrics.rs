//! Compute every global feature of the bundled corpus graph.
//!
//!     cargo run --example global_metrics

use linkgraph::corpus::{build_graph, Corpus, GraphVariant};
use linkgraph::global::global_report;
use linkgraph::output::{format_optional, format_real};

fn main() -> anyhow::Result<()> {
    let path = concat!(env!("CARGO_MANIFEST_DIR"), "/examples/data/corpus.jsonl");
    let corpus = Corpus::from_path(path)?;
    let graph = build_graph(&corpus, GraphVariant::AllLinks);
    let report = global_report(&graph)?;

    println!("nodes                  {}", report.nodes);
    println!("edges                  {}", report.edges);
    println!(
        "mean in-degree         {}",
        format_real(report.mean_in_degree)
    );
    println!("mean degree            {}", format_real(report.mean_degree));
    println!(
        "antiparallel fraction  {}",
        format_optional(report.antiparallel_fraction)
    );
    println!(
        "GSCC fraction          {}",
        format_real(report.gscc_fraction)
    );
    println!(
        "avg directed distance  {}",
        format_optional(report.avg_distance)
    );
    println!("finite pairs           {}", report.finite_pair_count);
    println!("clustering C           {}", format_real(report.clustering));
    println!(
        "random expectation C'  {}",
        format_optional(report.random_clustering)
    );
    println!(
        "assortativity out,in   {}",
        format_optional(report.assortativity_out_in)
    );
    println!(
        "assortativity in,out   {}",
        format_optional(report.assortativity_in_out)
    );
    println!(
        "assortativity out,out  {}",
        format_optional(report.assortativity_out_out)
    );
    println!(
        "assortativity in,in    {}",
        format_optional(report.assortativity_in_in)
    );
    Ok(())
}
