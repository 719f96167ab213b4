//! Node-isolation experiment on a synthetic heavy-tailed digraph: random
//! isolation averaged over trials versus targeting the highest-degree,
//! highest-stress, and highest-page-rank nodes.
//!
//!     cargo run --release --example percolation

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use linkgraph::global::gscc_fraction;
use linkgraph::local::{Feature, PowerIterationOpts};
use linkgraph::output::format_real;
use linkgraph::percolation::{breakdown_summary, isolate_run, IsolationSchedule};
use linkgraph::synth::power_law_digraph;

fn main() -> anyhow::Result<()> {
    let mut rng = ChaCha8Rng::seed_from_u64(42);
    let graph = power_law_digraph(1500, 2.5, 60, 0.2, &mut rng);
    println!(
        "synthetic graph: n = {}, m = {}, intact GSCC fraction = {}",
        graph.node_count(),
        graph.edge_count(),
        format_real(gscc_fraction(&graph))
    );

    let opts = PowerIterationOpts::default();
    let schedules = [
        IsolationSchedule::Random {
            seed: 7,
            trials: 10,
        },
        IsolationSchedule::Targeted {
            feature: Feature::Degree,
            recompute_every: None,
        },
        IsolationSchedule::Targeted {
            feature: Feature::Stress,
            recompute_every: None,
        },
        IsolationSchedule::Targeted {
            feature: Feature::PageRank,
            recompute_every: None,
        },
    ];

    let mut traces = Vec::new();
    for schedule in schedules {
        let trace = isolate_run(&graph, &schedule, &opts)?;
        // A few early points of the decay curve.
        print!("{:<10}", schedule.label());
        for point in trace
            .points
            .iter()
            .step_by(trace.points.len().max(5) / 5)
            .take(5)
        {
            print!(
                "  ({}, {})",
                format_real(point.isolated_fraction),
                format_real(point.gscc_fraction)
            );
        }
        println!();
        traces.push((schedule.label(), trace));
    }

    println!("\nbreakdown fractions, most destructive first:");
    for row in breakdown_summary(&traces) {
        println!(
            "  {:<10} {}",
            row.schedule,
            format_real(row.breakdown_fraction)
        );
    }
    Ok(())
}
