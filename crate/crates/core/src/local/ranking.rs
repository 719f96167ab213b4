//! Link-analysis scores: hub/authority and page rank.
//!
//! Both are Jacobi-style sweeps: every new value is computed from the full
//! previous vector, and each node's sum walks its neighbor list in index
//! order, so results do not depend on the number of worker threads.

use rayon::prelude::*;

use crate::graph::DirectedGraph;
use crate::local::{ConvergenceError, Feature, FeatureVector, PowerIterationOpts};

/// Converged hub and authority vectors, each rescaled to sum one.
#[derive(Debug, Clone)]
pub struct HitsScores {
    pub hubs: FeatureVector,
    pub authorities: FeatureVector,
    pub iterations: usize,
}

/// Converged page-rank vector, rescaled to sum one.
#[derive(Debug, Clone)]
pub struct PagerankScores {
    pub scores: FeatureVector,
    pub iterations: usize,
}

/// Mutually recursive hub/authority scoring.
///
/// Starting from all-ones vectors, each round recomputes authorities from
/// hub scores over in-neighbors and renormalizes to unit Euclidean norm,
/// then does the same for hubs over out-neighbors with the fresh authority
/// values. Convergence is judged on the normalized vectors; afterward both
/// are rescaled to sum one. An edgeless graph yields uniform vectors.
pub fn hits(g: &DirectedGraph, opts: &PowerIterationOpts) -> Result<HitsScores, ConvergenceError> {
    let n = g.node_count();
    if g.edge_count() == 0 {
        let uniform = vec![1.0 / n as f64; n];
        return Ok(HitsScores {
            hubs: FeatureVector {
                feature: Feature::Hub,
                values: uniform.clone(),
            },
            authorities: FeatureVector {
                feature: Feature::Authority,
                values: uniform,
            },
            iterations: 0,
        });
    }

    let mut authorities = vec![1.0f64; n];
    let mut hubs = vec![1.0f64; n];
    let mut next_authorities = vec![0.0f64; n];
    let mut next_hubs = vec![0.0f64; n];

    let mut residual = f64::INFINITY;
    for iteration in 1..=opts.max_iterations {
        next_authorities
            .par_iter_mut()
            .enumerate()
            .for_each(|(i, value)| {
                *value = g.in_neighbors(i).iter().map(|&j| hubs[j as usize]).sum();
            });
        normalize_euclidean(&mut next_authorities);

        next_hubs.par_iter_mut().enumerate().for_each(|(i, value)| {
            *value = g
                .out_neighbors(i)
                .iter()
                .map(|&j| next_authorities[j as usize])
                .sum();
        });
        normalize_euclidean(&mut next_hubs);

        residual = max_change(&authorities, &next_authorities).max(max_change(&hubs, &next_hubs));
        std::mem::swap(&mut authorities, &mut next_authorities);
        std::mem::swap(&mut hubs, &mut next_hubs);

        if residual <= opts.tolerance {
            rescale_to_unit_sum(&mut authorities);
            rescale_to_unit_sum(&mut hubs);
            return Ok(HitsScores {
                hubs: FeatureVector {
                    feature: Feature::Hub,
                    values: hubs,
                },
                authorities: FeatureVector {
                    feature: Feature::Authority,
                    values: authorities,
                },
                iterations: iteration,
            });
        }
    }

    Err(ConvergenceError {
        residual,
        iterations: opts.max_iterations,
    })
}

/// Damped in-neighbor score propagation:
/// `ρ_i := 0.15 + 0.85 · Σ_{j→i} ρ_j / outdeg(j)`.
///
/// The rule is applied verbatim — sink nodes contribute nothing and no mass
/// is redistributed for them; the additive 0.15 keeps every score positive.
/// Scores start at one and, after the largest component change drops to the
/// tolerance, are rescaled to sum one.
pub fn pagerank(
    g: &DirectedGraph,
    opts: &PowerIterationOpts,
) -> Result<PagerankScores, ConvergenceError> {
    const DAMPING: f64 = 0.85;
    let n = g.node_count();
    let mut scores = vec![1.0f64; n];
    let mut next = vec![0.0f64; n];

    let mut residual = f64::INFINITY;
    for iteration in 1..=opts.max_iterations {
        next.par_iter_mut().enumerate().for_each(|(i, value)| {
            let incoming: f64 = g
                .in_neighbors(i)
                .iter()
                .map(|&j| {
                    // j has an edge out to i, so its out-degree is ≥ 1.
                    scores[j as usize] / g.out_neighbors(j as usize).len() as f64
                })
                .sum();
            *value = (1.0 - DAMPING) + DAMPING * incoming;
        });

        residual = max_change(&scores, &next);
        std::mem::swap(&mut scores, &mut next);

        if residual <= opts.tolerance {
            rescale_to_unit_sum(&mut scores);
            return Ok(PagerankScores {
                scores: FeatureVector {
                    feature: Feature::PageRank,
                    values: scores,
                },
                iterations: iteration,
            });
        }
    }

    Err(ConvergenceError {
        residual,
        iterations: opts.max_iterations,
    })
}

fn normalize_euclidean(values: &mut [f64]) {
    let norm = values.iter().map(|v| v * v).sum::<f64>().sqrt();
    if norm > 0.0 {
        for v in values.iter_mut() {
            *v /= norm;
        }
    }
}

fn rescale_to_unit_sum(values: &mut [f64]) {
    let sum: f64 = values.iter().sum();
    if sum > 0.0 {
        for v in values.iter_mut() {
            *v /= sum;
        }
    }
}

fn max_change(old: &[f64], new: &[f64]) -> f64 {
    old.iter()
        .zip(new)
        .map(|(a, b)| (a - b).abs())
        .fold(0.0, f64::max)
}
