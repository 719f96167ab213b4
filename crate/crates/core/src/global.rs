//! Graph-wide scalar features.
//!
//! A [`GlobalReport`] collects every graph-level quantity this crate
//! measures: mean in-degree and mean degree with the antiparallel fraction
//! they imply, the relative size of the giant strongly connected component,
//! the average finite directed distance, clustering against its random-graph
//! expectation, and the four degree assortativity coefficients.
//!
//! Statistics that are undefined on a given graph (zero variance, no finite
//! pairs, no edges) are reported as `None`, never as silent NaNs.

use rayon::prelude::*;
use thiserror::Error;

use crate::graph::{DirectedGraph, UNREACHABLE};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GlobalError {
    #[error("graph has no nodes")]
    EmptyGraph,
}

/// Mean in-degree, mean degree, and the fraction of the mean degree owed to
/// antiparallel edge pairs.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MeanDegrees {
    pub mean_in_degree: f64,
    pub mean_degree: f64,
    /// `2·mean_in_degree/mean_degree − 1`; `None` when the graph has no
    /// edges.
    pub antiparallel_fraction: Option<f64>,
}

/// Average directed distance over ordered pairs at finite positive distance.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AverageDistance {
    /// `None` when no ordered pair is reachable.
    pub mean: Option<f64>,
    pub finite_pairs: u64,
}

/// Clustering of the undirected projection.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ClusteringStats {
    /// `3·triangles / path_triples`, or 0 when there are no path triples.
    pub coefficient: f64,
    pub triangles: u64,
    pub path_triples: u64,
    /// Expected coefficient for a random graph with the same degrees;
    /// `None` when the mean degree is zero.
    pub random_expectation: Option<f64>,
    /// Mean of the squared undirected degrees.
    pub degree_second_moment: f64,
}

/// Which degree of an edge endpoint enters an assortativity sequence.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DegreeKind {
    In,
    Out,
}

/// Every global feature of one graph.
#[derive(Debug, Clone)]
pub struct GlobalReport {
    pub nodes: usize,
    pub edges: usize,
    pub mean_in_degree: f64,
    pub mean_degree: f64,
    pub antiparallel_fraction: Option<f64>,
    pub gscc_fraction: f64,
    pub avg_distance: Option<f64>,
    pub finite_pair_count: u64,
    pub clustering: f64,
    pub triangle_count: u64,
    pub path_triple_count: u64,
    pub random_clustering: Option<f64>,
    pub degree_second_moment: f64,
    pub assortativity_out_in: Option<f64>,
    pub assortativity_in_out: Option<f64>,
    pub assortativity_out_out: Option<f64>,
    pub assortativity_in_in: Option<f64>,
}

/// Mean degrees and the antiparallel fraction. Errors on an empty graph.
pub fn mean_degrees(g: &DirectedGraph) -> Result<MeanDegrees, GlobalError> {
    let n = g.node_count();
    if n == 0 {
        return Err(GlobalError::EmptyGraph);
    }
    let mean_in_degree = g.edge_count() as f64 / n as f64;
    let degree_sum: usize = (0..n).map(|i| g.degrees(i).undirected_degree).sum();
    let mean_degree = degree_sum as f64 / n as f64;
    let antiparallel_fraction =
        (g.edge_count() > 0).then(|| 2.0 * mean_in_degree / mean_degree - 1.0);
    Ok(MeanDegrees {
        mean_in_degree,
        mean_degree,
        antiparallel_fraction,
    })
}

/// Size of the largest strongly connected component as a fraction of `n`.
pub fn gscc_fraction(g: &DirectedGraph) -> f64 {
    assert!(
        g.node_count() > 0,
        "gscc_fraction requires a nonempty graph"
    );
    g.scc().largest_size() as f64 / g.node_count() as f64
}

/// Average directed distance over all ordered pairs `(i, j)` with
/// `0 < d_ij < ∞`, and the number of such pairs.
///
/// BFS passes run in parallel per source; the distance sum and pair count
/// are integers, so the reduction is exact in any order.
pub fn average_distance(g: &DirectedGraph) -> AverageDistance {
    let n = g.node_count();
    let (sum, pairs) = (0..n)
        .into_par_iter()
        .map(|source| {
            let mut local_sum = 0u64;
            let mut local_pairs = 0u64;
            for &d in &g.bfs_distances(source) {
                if d > 0 && d != UNREACHABLE {
                    local_sum += d as u64;
                    local_pairs += 1;
                }
            }
            (local_sum, local_pairs)
        })
        .reduce(|| (0, 0), |a, b| (a.0 + b.0, a.1 + b.1));
    AverageDistance {
        mean: (pairs > 0).then(|| sum as f64 / pairs as f64),
        finite_pairs: pairs,
    }
}

/// Clustering statistics of the undirected projection.
pub fn clustering(g: &DirectedGraph) -> ClusteringStats {
    let n = g.node_count();
    let undirected = undirected_adjacency(g);

    let mut path_triples = 0u64;
    let mut second_moment_sum = 0u64;
    for nbrs in &undirected {
        let d = nbrs.len() as u64;
        path_triples += d * d.saturating_sub(1) / 2;
        second_moment_sum += d * d;
    }

    // Each triangle u < v < w is counted once, at its smallest vertex pair.
    let mut triangles = 0u64;
    for (u, nbrs) in undirected.iter().enumerate() {
        for &v in nbrs {
            if (v as usize) <= u {
                continue;
            }
            triangles += count_common_above(nbrs, &undirected[v as usize], v);
        }
    }

    let coefficient = if path_triples == 0 {
        0.0
    } else {
        3.0 * triangles as f64 / path_triples as f64
    };
    let degree_second_moment = second_moment_sum as f64 / n as f64;
    let mean_degree = undirected.iter().map(|a| a.len() as u64).sum::<u64>() as f64 / n as f64;
    let random_expectation = (mean_degree > 0.0).then(|| {
        let diff = degree_second_moment - mean_degree;
        diff * diff / (n as f64 * mean_degree.powi(3))
    });

    ClusteringStats {
        coefficient,
        triangles,
        path_triples,
        random_expectation,
        degree_second_moment,
    }
}

fn undirected_adjacency(g: &DirectedGraph) -> Vec<Vec<u32>> {
    (0..g.node_count())
        .map(|i| {
            let mut nbrs: Vec<u32> = g
                .out_neighbors(i)
                .iter()
                .chain(g.in_neighbors(i))
                .copied()
                .collect();
            nbrs.sort_unstable();
            nbrs.dedup();
            nbrs
        })
        .collect()
}

fn count_common_above(a: &[u32], b: &[u32], floor: u32) -> u64 {
    let (mut i, mut j, mut count) = (0, 0, 0);
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            std::cmp::Ordering::Less => i += 1,
            std::cmp::Ordering::Greater => j += 1,
            std::cmp::Ordering::Equal => {
                if a[i] > floor {
                    count += 1;
                }
                i += 1;
                j += 1;
            }
        }
    }
    count
}

/// Degree assortativity: the Pearson correlation, over edges, between a
/// chosen degree of the tail node and a chosen degree of the head node.
/// Returns `None` when the graph has no edges or either sequence has zero
/// variance.
pub fn assortativity(g: &DirectedGraph, tail: DegreeKind, head: DegreeKind) -> Option<f64> {
    let m = g.edge_count();
    if m == 0 {
        return None;
    }
    let pick = |node: usize, kind: DegreeKind| -> f64 {
        match kind {
            DegreeKind::In => g.in_neighbors(node).len() as f64,
            DegreeKind::Out => g.out_neighbors(node).len() as f64,
        }
    };
    let (mut sum_a, mut sum_b, mut sum_ab, mut sum_a2, mut sum_b2) = (0.0, 0.0, 0.0, 0.0, 0.0);
    for (u, v) in g.edges() {
        let a = pick(u as usize, tail);
        let b = pick(v as usize, head);
        sum_a += a;
        sum_b += b;
        sum_ab += a * b;
        sum_a2 += a * a;
        sum_b2 += b * b;
    }
    let m = m as f64;
    let mean_a = sum_a / m;
    let mean_b = sum_b / m;
    let var_a = sum_a2 / m - mean_a * mean_a;
    let var_b = sum_b2 / m - mean_b * mean_b;
    if var_a <= 0.0 || var_b <= 0.0 {
        return None;
    }
    Some((sum_ab / m - mean_a * mean_b) / (var_a.sqrt() * var_b.sqrt()))
}

/// Computes every global feature of a graph.
pub fn global_report(g: &DirectedGraph) -> Result<GlobalReport, GlobalError> {
    let degrees = mean_degrees(g)?;
    let distance = average_distance(g);
    let cluster = clustering(g);
    Ok(GlobalReport {
        nodes: g.node_count(),
        edges: g.edge_count(),
        mean_in_degree: degrees.mean_in_degree,
        mean_degree: degrees.mean_degree,
        antiparallel_fraction: degrees.antiparallel_fraction,
        gscc_fraction: gscc_fraction(g),
        avg_distance: distance.mean,
        finite_pair_count: distance.finite_pairs,
        clustering: cluster.coefficient,
        triangle_count: cluster.triangles,
        path_triple_count: cluster.path_triples,
        random_clustering: cluster.random_expectation,
        degree_second_moment: cluster.degree_second_moment,
        assortativity_out_in: assortativity(g, DegreeKind::Out, DegreeKind::In),
        assortativity_in_out: assortativity(g, DegreeKind::In, DegreeKind::Out),
        assortativity_out_out: assortativity(g, DegreeKind::Out, DegreeKind::Out),
        assortativity_in_in: assortativity(g, DegreeKind::In, DegreeKind::In),
    })
}
