//! Seeded random-graph generators for experiments and tests.

use std::collections::HashSet;

use rand::seq::SliceRandom;
use rand::Rng;

use crate::graph::DirectedGraph;

/// A directed Erdős–Rényi-style graph with exactly `edges` distinct ordered
/// pairs and no self-loops.
///
/// Panics if `edges` exceeds `n·(n−1)`.
pub fn erdos_renyi_digraph(n: usize, edges: usize, rng: &mut impl Rng) -> DirectedGraph {
    assert!(
        edges <= n.saturating_mul(n.saturating_sub(1)),
        "too many edges for {n} nodes"
    );
    let mut chosen: HashSet<(u32, u32)> = HashSet::with_capacity(edges);
    let mut list = Vec::with_capacity(edges);
    while list.len() < edges {
        let u = rng.random_range(0..n as u32);
        let v = rng.random_range(0..n as u32);
        if u != v && chosen.insert((u, v)) {
            list.push((u, v));
        }
    }
    DirectedGraph::from_edges(n, &list)
}

/// A directed graph with each ordered pair present independently with
/// probability `p`. Handy for small exhaustive-oracle tests.
pub fn bernoulli_digraph(n: usize, p: f64, rng: &mut impl Rng) -> DirectedGraph {
    let mut list = Vec::new();
    for u in 0..n as u32 {
        for v in 0..n as u32 {
            if u != v && rng.random::<f64>() < p {
                list.push((u, v));
            }
        }
    }
    DirectedGraph::from_edges(n, &list)
}

/// A configuration-style directed graph whose in- and out-degrees are drawn
/// independently from a truncated discrete power law `P(k) ∝ k^(−exponent)`
/// for `1 ≤ k ≤ max_degree`, except that each side is zero with probability
/// `zero_fraction` — hyperlink corpora have sink and source pages, and an
/// all-cyclic periphery is not representative. Stubs are matched uniformly
/// at random; self-loops and duplicate pairs are discarded.
pub fn power_law_digraph(
    n: usize,
    exponent: f64,
    max_degree: usize,
    zero_fraction: f64,
    rng: &mut impl Rng,
) -> DirectedGraph {
    assert!(n >= 2 && max_degree >= 1);
    assert!((0.0..1.0).contains(&zero_fraction));
    let max_degree = max_degree.min(n - 1);

    // Inverse-CDF sampler over k = 1..=max_degree.
    let mut cumulative = Vec::with_capacity(max_degree);
    let mut total = 0.0f64;
    for k in 1..=max_degree {
        total += (k as f64).powf(-exponent);
        cumulative.push(total);
    }
    let sample_degree = |rng: &mut dyn rand::RngCore| -> usize {
        if zero_fraction > 0.0 && rand::Rng::random::<f64>(rng) < zero_fraction {
            return 0;
        }
        let x: f64 = rand::Rng::random::<f64>(rng) * total;
        cumulative.partition_point(|&c| c < x) + 1
    };

    let mut out_deg: Vec<usize> = (0..n).map(|_| sample_degree(rng)).collect();
    let mut in_deg: Vec<usize> = (0..n).map(|_| sample_degree(rng)).collect();

    // Balance the stub totals by topping up random nodes on the short side.
    let (out_total, in_total) = (out_deg.iter().sum::<usize>(), in_deg.iter().sum::<usize>());
    let (short, deficit) = if out_total < in_total {
        (&mut out_deg, in_total - out_total)
    } else {
        (&mut in_deg, out_total - in_total)
    };
    for _ in 0..deficit {
        short[rng.random_range(0..n)] += 1;
    }

    let mut out_stubs: Vec<u32> = Vec::new();
    for (node, &d) in out_deg.iter().enumerate() {
        out_stubs.extend(std::iter::repeat_n(node as u32, d));
    }
    let mut in_stubs: Vec<u32> = Vec::new();
    for (node, &d) in in_deg.iter().enumerate() {
        in_stubs.extend(std::iter::repeat_n(node as u32, d));
    }
    in_stubs.shuffle(rng);

    let edges: Vec<(u32, u32)> = out_stubs.into_iter().zip(in_stubs).collect();
    DirectedGraph::from_edges(n, &edges)
}
