//! Parse the bundled corpus and build both graph variants.
//!
//!     cargo run --example build_graph

use linkgraph::corpus::{build_graph, Corpus, GraphVariant};

fn main() -> anyhow::Result<()> {
    let path = concat!(env!("CARGO_MANIFEST_DIR"), "/examples/data/corpus.jsonl");
    let corpus = Corpus::from_path(path)?;
    println!(
        "corpus: {} pages, {} dangling link(s) dropped at parse",
        corpus.len(),
        corpus.dropped_dangling_links()
    );

    for variant in [GraphVariant::AllLinks, GraphVariant::SeeAlsoOnly] {
        let g = build_graph(&corpus, variant);
        println!(
            "\nvariant {variant}: n = {}, m = {}",
            g.node_count(),
            g.edge_count()
        );
        let hub = (0..g.node_count())
            .max_by_key(|&i| g.degrees(i).undirected_degree)
            .unwrap();
        let d = g.degrees(hub);
        println!(
            "  highest-degree page: {} (in {}, out {}, degree {})",
            g.label(hub),
            d.in_degree,
            d.out_degree,
            d.undirected_degree
        );
        let reachable = g.reach_set(hub).len();
        println!("  pages reachable from it: {reachable}");
    }
    Ok(())
}
