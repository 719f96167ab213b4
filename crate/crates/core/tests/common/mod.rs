//! Independent oracles shared by the integration suites. Everything here
//! recomputes quantities from first principles — dense matrices, exhaustive
//! enumeration, brute-force closures — deliberately avoiding the library's
//! own algorithms.

#![allow(dead_code)]
// Index loops are the clearest form for the dense-matrix oracles here.
#![allow(clippy::needless_range_loop)]

use std::path::{Path, PathBuf};

use linkgraph::corpus::{Link, LinkKind, Page};
use linkgraph::graph::DirectedGraph;
use linkgraph::local::FeatureVector;

pub const INF: u64 = u64::MAX / 4;

/// Writes pages as a JSONL corpus file and returns its path.
pub fn write_corpus(dir: &Path, name: &str, pages: &[Page]) -> PathBuf {
    let path = dir.join(name);
    let mut text = String::new();
    for page in pages {
        text.push_str(&serde_json::to_string(page).unwrap());
        text.push('\n');
    }
    std::fs::write(&path, text).unwrap();
    path
}

pub fn page(id: &str, text: &str, links: &[(&str, LinkKind)]) -> Page {
    Page {
        id: id.to_string(),
        title: format!("Title of {id}"),
        text: text.to_string(),
        links: links
            .iter()
            .map(|(target, kind)| Link {
                target: target.to_string(),
                kind: *kind,
            })
            .collect(),
    }
}

/// Two pages with a single in-text link a → b.
pub fn two_page_corpus() -> Vec<Page> {
    vec![
        page("a", "alpha text", &[("b", LinkKind::InText)]),
        page("b", "beta text", &[]),
    ]
}

/// Two pages linked both ways.
pub fn two_cycle_corpus() -> Vec<Page> {
    vec![
        page("a", "alpha", &[("b", LinkKind::InText)]),
        page("b", "beta", &[("a", LinkKind::InText)]),
    ]
}

/// Three pages in a directed cycle.
pub fn three_cycle_corpus() -> Vec<Page> {
    vec![
        page("a", "alpha", &[("b", LinkKind::InText)]),
        page("b", "beta", &[("c", LinkKind::InText)]),
        page("c", "gamma", &[("a", LinkKind::InText)]),
    ]
}

/// A corpus where `common keyword` appears on 14 ring-linked pages and a
/// rare keyword on one, so keyword suites have one surviving query.
pub fn keyword_corpus() -> Vec<Page> {
    let n = 16;
    (0..n)
        .map(|i| {
            let id = format!("p{i:02}");
            let next = format!("p{:02}", (i + 1) % n);
            let prev = format!("p{:02}", (i + 5) % n);
            let text = if i < 14 {
                format!("page {i} mentions the shared topic word")
            } else if i == 14 {
                "page with a rare gemstone mention".to_string()
            } else {
                "entirely unrelated content".to_string()
            };
            Page {
                id,
                title: format!("Page {i}"),
                text,
                links: vec![
                    Link {
                        target: next,
                        kind: LinkKind::InText,
                    },
                    Link {
                        target: prev,
                        kind: LinkKind::SeeAlso,
                    },
                ],
            }
        })
        .collect()
}

/// All-pairs shortest distances by Floyd–Warshall on a dense matrix.
pub fn floyd_warshall(g: &DirectedGraph) -> Vec<Vec<u64>> {
    let n = g.node_count();
    let mut dist = vec![vec![INF; n]; n];
    for i in 0..n {
        dist[i][i] = 0;
        for &j in g.out_neighbors(i) {
            dist[i][j as usize] = 1;
        }
    }
    for k in 0..n {
        for i in 0..n {
            for j in 0..n {
                let through = dist[i][k].saturating_add(dist[k][j]);
                if through < dist[i][j] {
                    dist[i][j] = through;
                }
            }
        }
    }
    dist
}

/// Average finite positive distance and contributing pair count, from the
/// dense distance matrix.
pub fn avg_distance_oracle(dist: &[Vec<u64>]) -> (Option<f64>, u64) {
    let mut sum = 0u64;
    let mut pairs = 0u64;
    for row in dist {
        for &d in row {
            if d > 0 && d < INF {
                sum += d;
                pairs += 1;
            }
        }
    }
    ((pairs > 0).then(|| sum as f64 / pairs as f64), pairs)
}

/// Closeness and graph centrality recomputed from the dense matrix with the
/// same arithmetic shape as the definitions.
pub fn distance_centrality_oracle(dist: &[Vec<u64>]) -> (Vec<f64>, Vec<f64>) {
    let mut closeness = Vec::with_capacity(dist.len());
    let mut graph_centrality = Vec::with_capacity(dist.len());
    for row in dist {
        let mut sum = 0u64;
        let mut max = 0u64;
        for &d in row {
            if d > 0 && d < INF {
                sum += d;
                max = max.max(d);
            }
        }
        if sum == 0 {
            closeness.push(0.0);
            graph_centrality.push(0.0);
        } else {
            closeness.push(1.0 / sum as f64);
            graph_centrality.push(1.0 / max as f64);
        }
    }
    (closeness, graph_centrality)
}

/// Canonical SCC partition from the reachability closure: node → smallest
/// mutually-reachable node.
pub fn scc_partition_oracle(g: &DirectedGraph) -> Vec<usize> {
    let n = g.node_count();
    let mut reach = vec![vec![false; n]; n];
    for i in 0..n {
        reach[i][i] = true;
        for &j in g.out_neighbors(i) {
            reach[i][j as usize] = true;
        }
    }
    for k in 0..n {
        for i in 0..n {
            if reach[i][k] {
                for j in 0..n {
                    if reach[k][j] {
                        reach[i][j] = true;
                    }
                }
            }
        }
    }
    (0..n)
        .map(|i| (0..n).find(|&j| reach[i][j] && reach[j][i]).unwrap())
        .collect()
}

/// Canonical partition of a computed decomposition, comparable with
/// [`scc_partition_oracle`].
pub fn canonical_partition(dec: &linkgraph::SccDecomposition, n: usize) -> Vec<usize> {
    let mut smallest = vec![usize::MAX; dec.component_count()];
    for node in 0..n {
        let c = dec.component_of(node);
        smallest[c] = smallest[c].min(node);
    }
    (0..n)
        .map(|node| smallest[dec.component_of(node)])
        .collect()
}

/// Betweenness and stress by exhaustive DFS enumeration of every shortest
/// directed path. Exponential; for tiny graphs only.
pub fn path_centrality_oracle(g: &DirectedGraph) -> (Vec<f64>, Vec<u64>) {
    let n = g.node_count();
    let dist = floyd_warshall(g);
    let mut betweenness = vec![0.0f64; n];
    let mut stress = vec![0u64; n];

    for source in 0..n {
        for target in 0..n {
            if source == target || dist[source][target] >= INF {
                continue;
            }
            let mut paths: Vec<Vec<usize>> = Vec::new();
            let mut current = vec![source];
            enumerate_shortest_paths(g, &dist, source, target, &mut current, &mut paths);
            let sigma = paths.len() as u64;
            assert!(sigma >= 1);
            let mut through = vec![0u64; n];
            for path in &paths {
                for &node in &path[1..path.len() - 1] {
                    through[node] += 1;
                }
            }
            for node in 0..n {
                if node != source && node != target && through[node] > 0 {
                    betweenness[node] += through[node] as f64 / sigma as f64;
                    stress[node] += through[node];
                }
            }
        }
    }
    (betweenness, stress)
}

fn enumerate_shortest_paths(
    g: &DirectedGraph,
    dist: &[Vec<u64>],
    source: usize,
    target: usize,
    current: &mut Vec<usize>,
    paths: &mut Vec<Vec<usize>>,
) {
    let at = *current.last().unwrap();
    if at == target {
        paths.push(current.clone());
        return;
    }
    for &next in g.out_neighbors(at) {
        let next = next as usize;
        let walked = current.len() as u64 - 1;
        if dist[source][at] == walked
            && dist[source][next] == walked + 1
            && dist[next][target].saturating_add(walked + 1) == dist[source][target]
        {
            current.push(next);
            enumerate_shortest_paths(g, dist, source, target, current, paths);
            current.pop();
        }
    }
}

/// Two-pass Pearson correlation; `None` on zero variance or empty input.
pub fn pearson_two_pass(xs: &[f64], ys: &[f64]) -> Option<f64> {
    assert_eq!(xs.len(), ys.len());
    if xs.is_empty() {
        return None;
    }
    let m = xs.len() as f64;
    let mean_x = xs.iter().sum::<f64>() / m;
    let mean_y = ys.iter().sum::<f64>() / m;
    let var_x = xs.iter().map(|x| (x - mean_x) * (x - mean_x)).sum::<f64>() / m;
    let var_y = ys.iter().map(|y| (y - mean_y) * (y - mean_y)).sum::<f64>() / m;
    if var_x == 0.0 || var_y == 0.0 {
        return None;
    }
    let cov = xs
        .iter()
        .zip(ys)
        .map(|(x, y)| (x - mean_x) * (y - mean_y))
        .sum::<f64>()
        / m;
    Some(cov / (var_x.sqrt() * var_y.sqrt()))
}

/// The degree sequences of a graph's edges for assortativity oracles:
/// `(tail value, head value)` per edge under the chosen degree kinds.
pub fn edge_degree_sequences(
    g: &DirectedGraph,
    tail_in: bool,
    head_in: bool,
) -> (Vec<f64>, Vec<f64>) {
    let pick = |node: usize, use_in: bool| -> f64 {
        if use_in {
            g.in_neighbors(node).len() as f64
        } else {
            g.out_neighbors(node).len() as f64
        }
    };
    let mut alphas = Vec::with_capacity(g.edge_count());
    let mut betas = Vec::with_capacity(g.edge_count());
    for (u, v) in g.edges() {
        alphas.push(pick(u as usize, tail_in));
        betas.push(pick(v as usize, head_in));
    }
    (alphas, betas)
}

/// Principal eigenvector of `AᵀA` by a dense power method started from a
/// non-uniform vector (deliberately different from the library's all-ones
/// start).
pub fn principal_authority_oracle(g: &DirectedGraph) -> Vec<f64> {
    let n = g.node_count();
    let mut a = vec![vec![0.0f64; n]; n];
    for (u, v) in g.edges() {
        a[u as usize][v as usize] = 1.0;
    }
    let mut x: Vec<f64> = (0..n).map(|i| 1.0 + i as f64).collect();
    normalize(&mut x);
    for _ in 0..100_000 {
        // y = A·x, then x' = Aᵀ·y.
        let mut y = vec![0.0f64; n];
        for i in 0..n {
            for j in 0..n {
                y[i] += a[i][j] * x[j];
            }
        }
        let mut next = vec![0.0f64; n];
        for i in 0..n {
            for j in 0..n {
                next[i] += a[j][i] * y[j];
            }
        }
        normalize(&mut next);
        let change = x
            .iter()
            .zip(&next)
            .map(|(p, q)| (p - q).abs())
            .fold(0.0f64, f64::max);
        x = next;
        if change < 1e-14 {
            break;
        }
    }
    x
}

fn normalize(v: &mut [f64]) {
    let norm = v.iter().map(|x| x * x).sum::<f64>().sqrt();
    if norm > 0.0 {
        for x in v.iter_mut() {
            *x /= norm;
        }
    }
}

pub fn cosine(a: &[f64], b: &[f64]) -> f64 {
    let dot: f64 = a.iter().zip(b).map(|(x, y)| x * y).sum();
    let na: f64 = a.iter().map(|x| x * x).sum::<f64>().sqrt();
    let nb: f64 = b.iter().map(|x| x * x).sum::<f64>().sqrt();
    dot.abs() / (na * nb)
}

/// Exhaustive majority-vote tally over the ten top-ten lists, using repeated
/// max-extraction instead of sorting.
pub fn vote_oracle(matches: &[usize], features: &[FeatureVector]) -> Vec<usize> {
    if matches.len() <= 10 {
        return Vec::new();
    }
    let mut votes = vec![0usize; features[0].values.len()];
    for feature in features {
        let mut remaining: Vec<usize> = matches.to_vec();
        for _ in 0..10.min(remaining.len()) {
            let mut best = 0usize;
            for idx in 1..remaining.len() {
                let (node, champ) = (remaining[idx], remaining[best]);
                let better = feature.values[node] > feature.values[champ]
                    || (feature.values[node] == feature.values[champ] && node < champ);
                if better {
                    best = idx;
                }
            }
            votes[remaining.swap_remove(best)] += 1;
        }
    }
    matches
        .iter()
        .copied()
        .filter(|&node| votes[node] >= 6)
        .collect()
}
