//! Shortest-path centralities.
//!
//! Betweenness and stress come from one accumulation pass over per-source
//! shortest-path DAGs (O(n + m) per source for unweighted graphs); closeness
//! and graph centrality come from plain BFS. Sources are swept in parallel.

use std::collections::VecDeque;

use rayon::prelude::*;

use crate::graph::{DirectedGraph, UNREACHABLE};
use crate::local::{Feature, FeatureVector};

/// Betweenness and stress, which share their shortest-path pass.
#[derive(Debug, Clone)]
pub struct PathCentralities {
    pub betweenness: FeatureVector,
    pub stress: FeatureVector,
}

/// Closeness and graph centrality, which share their BFS pass.
#[derive(Debug, Clone)]
pub struct DistanceCentralities {
    pub closeness: FeatureVector,
    pub graph_centrality: FeatureVector,
}

// Sources are processed in fixed-size blocks and block results are merged in
// block order, so the floating-point betweenness sums come out bit-identical
// at any thread count. Stress sums are integers and order-free either way.
const SOURCE_BLOCK: usize = 256;

/// Betweenness `B_i` and stress `S_i` for every node: the weighted and
/// unweighted counts of shortest directed paths passing through `i`, with
/// path endpoints excluded.
pub fn shortest_path_centralities(g: &DirectedGraph) -> PathCentralities {
    let n = g.node_count();
    let blocks: Vec<std::ops::Range<usize>> = (0..n)
        .step_by(SOURCE_BLOCK.max(1))
        .map(|start| start..(start + SOURCE_BLOCK).min(n))
        .collect();

    let partials: Vec<(Vec<f64>, Vec<u64>)> = blocks
        .into_par_iter()
        .map(|block| {
            let mut betweenness = vec![0.0f64; n];
            let mut stress = vec![0u64; n];
            let mut scratch = Scratch::new(n);
            for source in block {
                accumulate_from_source(g, source, &mut betweenness, &mut stress, &mut scratch);
            }
            (betweenness, stress)
        })
        .collect();

    let mut betweenness = vec![0.0f64; n];
    let mut stress = vec![0u64; n];
    for (bw, st) in partials {
        for i in 0..n {
            betweenness[i] += bw[i];
            stress[i] += st[i];
        }
    }

    PathCentralities {
        betweenness: FeatureVector {
            feature: Feature::Betweenness,
            values: betweenness,
        },
        stress: FeatureVector {
            feature: Feature::Stress,
            values: stress.into_iter().map(|s| s as f64).collect(),
        },
    }
}

struct Scratch {
    dist: Vec<u32>,
    sigma: Vec<u64>,
    delta: Vec<f64>,
    downstream: Vec<u64>,
    preds: Vec<Vec<u32>>,
    order: Vec<u32>,
    queue: VecDeque<u32>,
}

impl Scratch {
    fn new(n: usize) -> Self {
        Scratch {
            dist: vec![UNREACHABLE; n],
            sigma: vec![0; n],
            delta: vec![0.0; n],
            downstream: vec![0; n],
            preds: vec![Vec::new(); n],
            order: Vec::with_capacity(n),
            queue: VecDeque::new(),
        }
    }

    fn reset_visited(&mut self) {
        for &w in &self.order {
            let w = w as usize;
            self.dist[w] = UNREACHABLE;
            self.sigma[w] = 0;
            self.delta[w] = 0.0;
            self.downstream[w] = 0;
            self.preds[w].clear();
        }
        self.order.clear();
    }
}

fn accumulate_from_source(
    g: &DirectedGraph,
    source: usize,
    betweenness: &mut [f64],
    stress: &mut [u64],
    scratch: &mut Scratch,
) {
    let s = scratch;
    s.dist[source] = 0;
    s.sigma[source] = 1;
    s.order.push(source as u32);
    s.queue.push_back(source as u32);

    while let Some(v) = s.queue.pop_front() {
        let dv = s.dist[v as usize];
        for &w in g.out_neighbors(v as usize) {
            let wu = w as usize;
            if s.dist[wu] == UNREACHABLE {
                s.dist[wu] = dv + 1;
                s.order.push(w);
                s.queue.push_back(w);
            }
            if s.dist[wu] == dv + 1 {
                s.sigma[wu] += s.sigma[v as usize];
                s.preds[wu].push(v);
            }
        }
    }

    // Dependency accumulation in reverse BFS order. `downstream[v]` counts,
    // per path multiplicity below v, the shortest-path endpoints reached
    // through v, keeping stress exactly integral:
    //   stress contribution of v = sigma[v] · downstream[v].
    for &w in s.order.iter().rev() {
        let wu = w as usize;
        let coefficient = (1.0 + s.delta[wu]) / s.sigma[wu] as f64;
        for &v in &s.preds[wu] {
            let vu = v as usize;
            s.delta[vu] += s.sigma[vu] as f64 * coefficient;
            s.downstream[vu] += 1 + s.downstream[wu];
        }
        if wu != source {
            betweenness[wu] += s.delta[wu];
            stress[wu] += s.sigma[wu] * s.downstream[wu];
        }
    }

    s.reset_visited();
}

/// Closeness `C_i = 1/Σ d_ij` and graph centrality `G_i = 1/max d_ij`, both
/// over the reachable set of `i` and zero for nodes reaching nothing.
pub fn closeness_centralities(g: &DirectedGraph) -> DistanceCentralities {
    let n = g.node_count();
    let pairs: Vec<(f64, f64)> = (0..n)
        .into_par_iter()
        .map(|i| {
            let mut sum = 0u64;
            let mut max = 0u32;
            for &d in &g.bfs_distances(i) {
                if d > 0 && d != UNREACHABLE {
                    sum += d as u64;
                    max = max.max(d);
                }
            }
            if sum == 0 {
                (0.0, 0.0)
            } else {
                (1.0 / sum as f64, 1.0 / max as f64)
            }
        })
        .collect();

    DistanceCentralities {
        closeness: FeatureVector {
            feature: Feature::Closeness,
            values: pairs.iter().map(|p| p.0).collect(),
        },
        graph_centrality: FeatureVector {
            feature: Feature::GraphCentrality,
            values: pairs.iter().map(|p| p.1).collect(),
        },
    }
}
