//! Complementary cumulative distribution of a feature, as plain (z, F(z))
//! points ready for log-log plotting.
//!
//!     cargo run --example ccd_points

use linkgraph::corpus::{build_graph, Corpus, GraphVariant};
use linkgraph::local::{ccd, compute_feature, Feature, PowerIterationOpts};
use linkgraph::output::format_real;

fn main() -> anyhow::Result<()> {
    let path = concat!(env!("CARGO_MANIFEST_DIR"), "/examples/data/corpus.jsonl");
    let corpus = Corpus::from_path(path)?;
    let graph = build_graph(&corpus, GraphVariant::AllLinks);

    for feature in [Feature::InDegree, Feature::OutDegree, Feature::Degree] {
        let vector = compute_feature(&graph, feature, &PowerIterationOpts::default())?;
        let table = ccd(&vector.values);
        println!("{feature} CCD:");
        for (z, fraction) in table.points() {
            println!("  F({}) = {}", format_real(z), format_real(fraction));
        }
        println!();
    }
    Ok(())
}
