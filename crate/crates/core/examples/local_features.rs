//! Compute all ten local features and show the top pages under a few of
//! them.
//!
//!     cargo run --example local_features

use linkgraph::corpus::{build_graph, Corpus, GraphVariant};
use linkgraph::local::{compute_all_features, Feature, PowerIterationOpts};
use linkgraph::output::format_real;

fn main() -> anyhow::Result<()> {
    let path = concat!(env!("CARGO_MANIFEST_DIR"), "/examples/data/corpus.jsonl");
    let corpus = Corpus::from_path(path)?;
    let graph = build_graph(&corpus, GraphVariant::AllLinks);
    let features = compute_all_features(&graph, &PowerIterationOpts::default())?;

    for wanted in [
        Feature::Stress,
        Feature::Betweenness,
        Feature::PageRank,
        Feature::Authority,
    ] {
        let vector = features
            .iter()
            .find(|f| f.feature == wanted)
            .expect("all ten features are present");
        let mut ranked: Vec<usize> = (0..graph.node_count()).collect();
        ranked.sort_by(|&a, &b| {
            vector.values[b]
                .partial_cmp(&vector.values[a])
                .unwrap()
                .then(a.cmp(&b))
        });
        println!("top pages by {wanted}:");
        for &node in ranked.iter().take(5) {
            println!(
                "  {:<16} {}",
                graph.label(node),
                format_real(vector.values[node])
            );
        }
        println!();
    }
    Ok(())
}
