//! Keyword-search evaluation on the bundled corpus: answer lists ranked by
//! each local feature, majority-vote relevant sets, and bucketed
//! Precision-Recall curves.
//!
//!     cargo run --example search_eval

use linkgraph::corpus::{build_graph, Corpus, GraphVariant};
use linkgraph::local::{compute_all_features, Feature, PowerIterationOpts};
use linkgraph::output::{format_optional, format_real};
use linkgraph::search::{run_keyword_suite, PrCurve, TokenizedCorpus, BUCKET_COUNT};

fn main() -> anyhow::Result<()> {
    let dir = concat!(env!("CARGO_MANIFEST_DIR"), "/examples/data");
    let corpus = Corpus::from_path(format!("{dir}/corpus.jsonl"))?;
    let graph = build_graph(&corpus, GraphVariant::AllLinks);
    let features = compute_all_features(&graph, &PowerIterationOpts::default())?;
    let tokens = TokenizedCorpus::new(&corpus);

    let keywords: Vec<String> = std::fs::read_to_string(format!("{dir}/keywords.txt"))?
        .lines()
        .map(str::to_string)
        .collect();
    let outcome = run_keyword_suite(&tokens, &features, &keywords, 100)?;

    for q in &outcome.evaluated {
        println!(
            "evaluated {:?}: {} matching pages, {} relevant",
            q.keyword, q.matched, q.relevant
        );
    }
    for q in &outcome.dropped {
        println!(
            "dropped {:?}: {} matching pages ({})",
            q.keyword,
            q.matched,
            q.reason.as_str()
        );
    }

    for feature in [Feature::Stress, Feature::PageRank] {
        let idx = Feature::ALL.iter().position(|&f| f == feature).unwrap();
        let curve = &outcome.curves[idx];
        println!("\nmean precision per recall bucket, ranking by {feature}:");
        for bucket in 0..BUCKET_COUNT {
            println!(
                "  recall {:<4} precision {} ({} points)",
                format_real(PrCurve::abscissa(bucket)),
                format_optional(curve.mean(bucket)),
                curve.count(bucket)
            );
        }
    }
    Ok(())
}
