//! Per-node local features and their distributions.
//!
//! Ten features are supported: the three degree counts, four shortest-path
//! centralities (betweenness, stress, closeness, graph centrality), and the
//! three link-analysis scores (hub, authority, page rank). Feature vectors
//! feed the percolation and search-evaluation pipelines and can be reduced
//! to complementary cumulative distributions with [`ccd`].

mod centrality;
mod ranking;

use std::str::FromStr;

pub use centrality::{
    closeness_centralities, shortest_path_centralities, DistanceCentralities, PathCentralities,
};
pub use ranking::{hits, pagerank, HitsScores, PagerankScores};

use thiserror::Error;

use crate::graph::DirectedGraph;

/// The ten local features.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Feature {
    InDegree,
    OutDegree,
    Degree,
    Betweenness,
    Stress,
    Closeness,
    GraphCentrality,
    Hub,
    Authority,
    PageRank,
}

impl Feature {
    pub const ALL: [Feature; 10] = [
        Feature::InDegree,
        Feature::OutDegree,
        Feature::Degree,
        Feature::Betweenness,
        Feature::Stress,
        Feature::Closeness,
        Feature::GraphCentrality,
        Feature::Hub,
        Feature::Authority,
        Feature::PageRank,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            Feature::InDegree => "in-degree",
            Feature::OutDegree => "out-degree",
            Feature::Degree => "degree",
            Feature::Betweenness => "betweenness",
            Feature::Stress => "stress",
            Feature::Closeness => "closeness",
            Feature::GraphCentrality => "graph-centrality",
            Feature::Hub => "hub",
            Feature::Authority => "authority",
            Feature::PageRank => "pagerank",
        }
    }
}

impl std::fmt::Display for Feature {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Feature {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Feature::ALL
            .iter()
            .find(|f| f.name() == s)
            .copied()
            .ok_or_else(|| {
                let names: Vec<&str> = Feature::ALL.iter().map(|f| f.name()).collect();
                format!(
                    "unknown feature {s:?} (expected one of: {})",
                    names.join(", ")
                )
            })
    }
}

/// Per-node values of one feature. Degrees and stress are exact integers
/// widened to reals.
#[derive(Debug, Clone)]
pub struct FeatureVector {
    pub feature: Feature,
    pub values: Vec<f64>,
}

impl FeatureVector {
    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }
}

/// Convergence controls for the hub/authority and page-rank iterations.
///
/// The update rules are iterated until no component moves by more than
/// `tolerance` between consecutive sweeps. The default of `1e-12` sits a few
/// decades above double-precision round-off, where a tighter setting could
/// oscillate forever; outputs record the setting used.
#[derive(Debug, Clone, Copy)]
pub struct PowerIterationOpts {
    pub tolerance: f64,
    pub max_iterations: usize,
}

impl Default for PowerIterationOpts {
    fn default() -> Self {
        PowerIterationOpts {
            tolerance: 1e-12,
            max_iterations: 100_000,
        }
    }
}

/// Iteration budget exhausted before the residual dropped to the tolerance.
#[derive(Debug, Clone, Copy, Error)]
#[error("no convergence after {iterations} iterations (last residual {residual:.3e})")]
pub struct ConvergenceError {
    pub residual: f64,
    pub iterations: usize,
}

/// The three degree features, in `(in, out, undirected)` order.
pub fn degree_vectors(g: &DirectedGraph) -> [FeatureVector; 3] {
    let n = g.node_count();
    let mut in_d = Vec::with_capacity(n);
    let mut out_d = Vec::with_capacity(n);
    let mut und = Vec::with_capacity(n);
    for i in 0..n {
        let d = g.degrees(i);
        in_d.push(d.in_degree as f64);
        out_d.push(d.out_degree as f64);
        und.push(d.undirected_degree as f64);
    }
    [
        FeatureVector {
            feature: Feature::InDegree,
            values: in_d,
        },
        FeatureVector {
            feature: Feature::OutDegree,
            values: out_d,
        },
        FeatureVector {
            feature: Feature::Degree,
            values: und,
        },
    ]
}

/// Computes one feature vector.
///
/// The paired passes (betweenness/stress, closeness/graph centrality,
/// hub/authority) share their computation; use [`compute_all_features`] when
/// more than one of a pair is needed.
pub fn compute_feature(
    g: &DirectedGraph,
    feature: Feature,
    opts: &PowerIterationOpts,
) -> Result<FeatureVector, ConvergenceError> {
    Ok(match feature {
        Feature::InDegree => degree_vectors(g)[0].clone(),
        Feature::OutDegree => degree_vectors(g)[1].clone(),
        Feature::Degree => degree_vectors(g)[2].clone(),
        Feature::Betweenness => shortest_path_centralities(g).betweenness,
        Feature::Stress => shortest_path_centralities(g).stress,
        Feature::Closeness => closeness_centralities(g).closeness,
        Feature::GraphCentrality => closeness_centralities(g).graph_centrality,
        Feature::Hub => hits(g, opts)?.hubs,
        Feature::Authority => hits(g, opts)?.authorities,
        Feature::PageRank => pagerank(g, opts)?.scores,
    })
}

/// All ten feature vectors, in [`Feature::ALL`] order.
pub fn compute_all_features(
    g: &DirectedGraph,
    opts: &PowerIterationOpts,
) -> Result<Vec<FeatureVector>, ConvergenceError> {
    let [in_d, out_d, und] = degree_vectors(g);
    let paths = shortest_path_centralities(g);
    let dist = closeness_centralities(g);
    let hits_scores = hits(g, opts)?;
    let pr = pagerank(g, opts)?;
    Ok(vec![
        in_d,
        out_d,
        und,
        paths.betweenness,
        paths.stress,
        dist.closeness,
        dist.graph_centrality,
        hits_scores.hubs,
        hits_scores.authorities,
        pr.scores,
    ])
}

/// Complementary cumulative distribution of a feature: for each threshold
/// `z`, the fraction of nodes whose value strictly exceeds `z`.
#[derive(Debug, Clone)]
pub struct CcdTable {
    thresholds: Vec<f64>,
    fractions: Vec<f64>,
}

impl CcdTable {
    /// Threshold/fraction pairs in ascending threshold order.
    pub fn points(&self) -> impl Iterator<Item = (f64, f64)> + '_ {
        self.thresholds
            .iter()
            .copied()
            .zip(self.fractions.iter().copied())
    }

    pub fn len(&self) -> usize {
        self.thresholds.len()
    }

    pub fn is_empty(&self) -> bool {
        self.thresholds.is_empty()
    }

    /// Fraction of nodes with value strictly above `z`, for arbitrary `z`.
    pub fn fraction_above(&self, z: f64) -> f64 {
        match self
            .thresholds
            .binary_search_by(|t| t.partial_cmp(&z).unwrap())
        {
            Ok(i) => self.fractions[i],
            // Below the smallest threshold every value exceeds z.
            Err(0) => 1.0,
            Err(i) => self.fractions[i - 1],
        }
    }
}

/// Evaluates the CCD of a value vector at every distinct value plus zero.
pub fn ccd(values: &[f64]) -> CcdTable {
    assert!(!values.is_empty(), "ccd requires at least one value");
    let n = values.len() as f64;
    let mut sorted = values.to_vec();
    sorted.sort_by(|a, b| a.partial_cmp(b).unwrap());

    let mut thresholds: Vec<f64> = Vec::new();
    if sorted[0] > 0.0 {
        thresholds.push(0.0);
    }
    for &v in &sorted {
        if thresholds.last() != Some(&v) {
            thresholds.push(v);
        }
    }

    let fractions = thresholds
        .iter()
        .map(|&z| {
            // First index with value > z; everything from there up counts.
            let above = sorted.partition_point(|&v| v <= z);
            (sorted.len() - above) as f64 / n
        })
        .collect();
    CcdTable {
        thresholds,
        fractions,
    }
}
