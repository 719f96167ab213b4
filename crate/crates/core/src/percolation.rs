//! Node-isolation experiments on the giant strongly connected component.
//!
//! Isolating a node removes every edge incident to it while the node itself
//! stays in the graph. Isolation proceeds — randomly or targeting the
//! highest-valued node of a chosen local feature — until no strongly
//! connected component has more than one node, and the size of the largest
//! component is recorded after every step.

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use thiserror::Error;

use crate::graph::DirectedGraph;
use crate::local::{compute_feature, ConvergenceError, Feature, PowerIterationOpts};

/// How nodes are picked for isolation.
#[derive(Debug, Clone)]
pub enum IsolationSchedule {
    /// Uniformly random order, averaged over independent trials.
    Random { seed: u64, trials: usize },
    /// Highest feature value first, ties to the lowest node index. Feature
    /// values are computed once on the intact graph unless `recompute_every`
    /// asks for periodic recomputation on the masked graph.
    Targeted {
        feature: Feature,
        recompute_every: Option<usize>,
    },
}

impl IsolationSchedule {
    pub fn label(&self) -> String {
        match self {
            IsolationSchedule::Random { .. } => "random".to_string(),
            IsolationSchedule::Targeted { feature, .. } => feature.name().to_string(),
        }
    }
}

/// State sampled after one isolation step.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TracePoint {
    pub isolated_count: usize,
    pub isolated_fraction: f64,
    /// Largest-SCC size over `n`; averaged pointwise across trials for
    /// random schedules.
    pub gscc_fraction: f64,
}

/// The evolution of the giant component under one isolation schedule.
#[derive(Debug, Clone)]
pub struct PercolationTrace {
    pub points: Vec<TracePoint>,
    /// Isolated fraction when no component larger than one node remained;
    /// for random schedules, the mean over trials.
    pub breakdown_fraction: f64,
}

#[derive(Debug, Error)]
pub enum PercolationError {
    #[error("random schedule requires at least one trial")]
    NoTrials,
    #[error("feature computation failed: {0}")]
    Feature(#[from] ConvergenceError),
}

/// Runs one isolation schedule to completion.
///
/// If the graph already has no component with at least two nodes, the trace
/// is empty and the breakdown fraction is zero.
pub fn isolate_run(
    g: &DirectedGraph,
    schedule: &IsolationSchedule,
    opts: &PowerIterationOpts,
) -> Result<PercolationTrace, PercolationError> {
    match schedule {
        IsolationSchedule::Random { seed, trials } => {
            if *trials == 0 {
                return Err(PercolationError::NoTrials);
            }
            Ok(random_run(g, *seed, *trials))
        }
        IsolationSchedule::Targeted {
            feature,
            recompute_every,
        } => targeted_run(g, *feature, *recompute_every, opts),
    }
}

/// One row of a breakdown comparison table.
#[derive(Debug, Clone, PartialEq)]
pub struct BreakdownRow {
    pub schedule: String,
    pub breakdown_fraction: f64,
}

/// Final isolated fractions per schedule, sorted ascending by fraction.
pub fn breakdown_summary(traces: &[(String, PercolationTrace)]) -> Vec<BreakdownRow> {
    let mut rows: Vec<BreakdownRow> = traces
        .iter()
        .map(|(schedule, trace)| BreakdownRow {
            schedule: schedule.clone(),
            breakdown_fraction: trace.breakdown_fraction,
        })
        .collect();
    rows.sort_by(|a, b| {
        a.breakdown_fraction
            .partial_cmp(&b.breakdown_fraction)
            .unwrap()
    });
    rows
}

fn random_run(g: &DirectedGraph, seed: u64, trials: usize) -> PercolationTrace {
    let n = g.node_count();
    let curves: Vec<Vec<f64>> = (0..trials as u64)
        .into_par_iter()
        .map(|trial| {
            let mut rng = ChaCha8Rng::seed_from_u64(
                seed.wrapping_add(trial.wrapping_mul(0x9E37_79B9_7F4A_7C15)),
            );
            let mut order: Vec<u32> = (0..n as u32).collect();
            order.shuffle(&mut rng);
            trial_curve(g, &order)
        })
        .collect();

    // Pointwise mean in trial order; trials that finished early hold their
    // final value for the longer abscissae.
    let longest = curves.iter().map(Vec::len).max().unwrap_or(0);
    let points = (0..longest)
        .map(|k| {
            let sum: f64 = curves
                .iter()
                .map(|c| c.get(k).or(c.last()).copied().unwrap_or(0.0))
                .sum();
            TracePoint {
                isolated_count: k + 1,
                isolated_fraction: (k + 1) as f64 / n as f64,
                gscc_fraction: sum / curves.len() as f64,
            }
        })
        .collect();
    let breakdown_fraction = curves
        .iter()
        .map(|c| c.len() as f64 / n as f64)
        .sum::<f64>()
        / curves.len() as f64;
    PercolationTrace {
        points,
        breakdown_fraction,
    }
}

fn targeted_run(
    g: &DirectedGraph,
    feature: Feature,
    recompute_every: Option<usize>,
    opts: &PowerIterationOpts,
) -> Result<PercolationTrace, PercolationError> {
    let n = g.node_count();
    let curve = match recompute_every {
        None => {
            let values = compute_feature(g, feature, opts)?.values;
            trial_curve(g, &ranked_order(&values, |_| true))
        }
        Some(period) => {
            let period = period.max(1);
            let mut engine = TrialEngine::new(g);
            let mut values = compute_feature(g, feature, opts)?.values;
            while engine.largest_size > 1 {
                let isolated = &engine.isolated;
                let order = ranked_order(&values, |v| !isolated[v]);
                for &v in order.iter().take(period) {
                    engine.isolate(v as usize);
                    if engine.largest_size <= 1 {
                        break;
                    }
                }
                if engine.largest_size > 1 {
                    values =
                        compute_feature(&g.masked_copy(&engine.isolated), feature, opts)?.values;
                }
            }
            engine.curve
        }
    };

    let breakdown_fraction = curve.len() as f64 / n as f64;
    let points = curve
        .iter()
        .enumerate()
        .map(|(k, &s)| TracePoint {
            isolated_count: k + 1,
            isolated_fraction: (k + 1) as f64 / n as f64,
            gscc_fraction: s,
        })
        .collect();
    Ok(PercolationTrace {
        points,
        breakdown_fraction,
    })
}

/// Node indices sorted by descending value, ties to the lower index.
fn ranked_order(values: &[f64], keep: impl Fn(usize) -> bool) -> Vec<u32> {
    let mut order: Vec<u32> = (0..values.len() as u32)
        .filter(|&v| keep(v as usize))
        .collect();
    order.sort_by(|&a, &b| {
        values[b as usize]
            .partial_cmp(&values[a as usize])
            .unwrap()
            .then(a.cmp(&b))
    });
    order
}

/// Isolates nodes in the given order until no component has two nodes,
/// returning the largest-SCC fraction after each step.
fn trial_curve(g: &DirectedGraph, order: &[u32]) -> Vec<f64> {
    let mut engine = TrialEngine::new(g);
    let mut cursor = 0usize;
    while engine.largest_size > 1 {
        let v = order[cursor] as usize;
        cursor += 1;
        if !engine.isolated[v] {
            engine.isolate(v);
        }
    }
    engine.curve
}

struct TrialEngine<'a> {
    g: &'a DirectedGraph,
    isolated: Vec<bool>,
    component_of: Vec<u32>,
    component_sizes: Vec<u32>,
    largest_size: usize,
    curve: Vec<f64>,
}

impl<'a> TrialEngine<'a> {
    fn new(g: &'a DirectedGraph) -> Self {
        let dec = g.scc();
        let n = g.node_count();
        TrialEngine {
            g,
            isolated: vec![false; n],
            component_of: (0..n).map(|i| dec.component_of(i) as u32).collect(),
            component_sizes: (0..dec.component_count())
                .map(|c| dec.size(c) as u32)
                .collect(),
            largest_size: dec.largest_size(),
            curve: Vec::new(),
        }
    }

    fn isolate(&mut self, v: usize) {
        debug_assert!(!self.isolated[v]);
        self.isolated[v] = true;
        // Isolating a node that already sits in a singleton component cannot
        // change the partition: cross-component edges never bind components,
        // and every other component keeps all of its internal edges.
        if self.component_sizes[self.component_of[v] as usize] > 1 {
            let dec = self.g.scc_masked(&self.isolated);
            for i in 0..self.component_of.len() {
                self.component_of[i] = dec.component_of(i) as u32;
            }
            self.component_sizes = (0..dec.component_count())
                .map(|c| dec.size(c) as u32)
                .collect();
            self.largest_size = dec.largest_size();
        }
        self.curve
            .push(self.largest_size as f64 / self.g.node_count() as f64);
    }
}
