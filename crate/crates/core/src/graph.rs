//! Immutable directed-graph representation.
//!
//! Adjacency is stored CSR-style in both directions with sorted neighbor
//! lists, no self-loops, and no parallel edges. Node indices are dense
//! `0..n`; a graph built from a corpus labels them with page ids in
//! lexicographic order.

use std::collections::VecDeque;

/// Sentinel distance for unreachable nodes.
pub const UNREACHABLE: u32 = u32::MAX;

/// In-degree, out-degree, and undirected degree of one node.
///
/// The undirected degree counts distinct neighbors, so an antiparallel pair
/// of edges contributes one neighbor, not two.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Degrees {
    pub in_degree: usize,
    pub out_degree: usize,
    pub undirected_degree: usize,
}

/// A simple directed graph with forward and reverse adjacency.
#[derive(Debug, Clone)]
pub struct DirectedGraph {
    out_off: Vec<usize>,
    out_adj: Vec<u32>,
    in_off: Vec<usize>,
    in_adj: Vec<u32>,
    labels: Vec<String>,
}

impl DirectedGraph {
    /// Builds a graph from labeled nodes and raw edges. Self-loops are
    /// dropped and duplicate ordered pairs collapse to one edge.
    ///
    /// Panics if an edge endpoint is out of range.
    pub fn new(labels: Vec<String>, edges: impl IntoIterator<Item = (u32, u32)>) -> Self {
        let n = labels.len();
        let mut list: Vec<(u32, u32)> = edges
            .into_iter()
            .inspect(|&(u, v)| {
                assert!(
                    (u as usize) < n && (v as usize) < n,
                    "edge ({u}, {v}) out of range for {n} nodes"
                );
            })
            .filter(|&(u, v)| u != v)
            .collect();
        list.sort_unstable();
        list.dedup();

        let (out_off, out_adj) = csr(n, list.iter().copied());
        let mut reversed: Vec<(u32, u32)> = list.iter().map(|&(u, v)| (v, u)).collect();
        reversed.sort_unstable();
        let (in_off, in_adj) = csr(n, reversed.into_iter());

        DirectedGraph {
            out_off,
            out_adj,
            in_off,
            in_adj,
            labels,
        }
    }

    /// Builds a graph with synthesized zero-padded numeric labels, which keep
    /// lexicographic label order aligned with node index order.
    pub fn from_edges(n: usize, edges: &[(u32, u32)]) -> Self {
        let width = n.saturating_sub(1).to_string().len();
        let labels = (0..n).map(|i| format!("n{i:0width$}")).collect();
        Self::new(labels, edges.iter().copied())
    }

    pub fn node_count(&self) -> usize {
        self.labels.len()
    }

    pub fn edge_count(&self) -> usize {
        self.out_adj.len()
    }

    pub fn out_neighbors(&self, i: usize) -> &[u32] {
        &self.out_adj[self.out_off[i]..self.out_off[i + 1]]
    }

    pub fn in_neighbors(&self, i: usize) -> &[u32] {
        &self.in_adj[self.in_off[i]..self.in_off[i + 1]]
    }

    pub fn label(&self, i: usize) -> &str {
        &self.labels[i]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn edges(&self) -> impl Iterator<Item = (u32, u32)> + '_ {
        (0..self.node_count())
            .flat_map(move |i| self.out_neighbors(i).iter().map(move |&j| (i as u32, j)))
    }

    /// Degrees of node `i`. Panics if `i` is out of range.
    pub fn degrees(&self, i: usize) -> Degrees {
        let out = self.out_neighbors(i);
        let inn = self.in_neighbors(i);
        Degrees {
            in_degree: inn.len(),
            out_degree: out.len(),
            undirected_degree: sorted_union_len(inn, out),
        }
    }

    /// The graph with every edge reversed.
    pub fn transpose(&self) -> DirectedGraph {
        DirectedGraph {
            out_off: self.in_off.clone(),
            out_adj: self.in_adj.clone(),
            in_off: self.out_off.clone(),
            in_adj: self.out_adj.clone(),
            labels: self.labels.clone(),
        }
    }

    /// A copy with every edge incident to a masked node removed. The node
    /// set is unchanged.
    pub fn masked_copy(&self, isolated: &[bool]) -> DirectedGraph {
        let edges = self
            .edges()
            .filter(|&(u, v)| !isolated[u as usize] && !isolated[v as usize]);
        DirectedGraph::new(self.labels.clone(), edges)
    }

    /// Directed BFS distances from `source`; unreachable nodes hold
    /// [`UNREACHABLE`].
    pub fn bfs_distances(&self, source: usize) -> Vec<u32> {
        let mut dist = vec![UNREACHABLE; self.node_count()];
        dist[source] = 0;
        let mut queue = VecDeque::new();
        queue.push_back(source as u32);
        while let Some(u) = queue.pop_front() {
            let du = dist[u as usize];
            for &v in self.out_neighbors(u as usize) {
                if dist[v as usize] == UNREACHABLE {
                    dist[v as usize] = du + 1;
                    queue.push_back(v);
                }
            }
        }
        dist
    }

    /// Nodes reachable from `source` by a directed path of at least one edge,
    /// in ascending index order.
    pub fn reach_set(&self, source: usize) -> Vec<u32> {
        self.bfs_distances(source)
            .iter()
            .enumerate()
            .filter(|&(_, &d)| d > 0 && d != UNREACHABLE)
            .map(|(j, _)| j as u32)
            .collect()
    }

    /// Strongly connected components of the whole graph.
    pub fn scc(&self) -> SccDecomposition {
        self.tarjan(None)
    }

    /// Strongly connected components with masked nodes treated as edgeless.
    /// Masked nodes remain in the decomposition as singletons.
    pub fn scc_masked(&self, isolated: &[bool]) -> SccDecomposition {
        assert_eq!(isolated.len(), self.node_count());
        self.tarjan(Some(isolated))
    }

    // Iterative Tarjan; recursion is unusable at the node counts this crate
    // targets. Runs in O(n + m).
    fn tarjan(&self, isolated: Option<&[bool]>) -> SccDecomposition {
        const UNSET: u32 = u32::MAX;
        let n = self.node_count();
        let masked = |v: usize| isolated.is_some_and(|m| m[v]);

        let mut index = vec![UNSET; n];
        let mut low = vec![0u32; n];
        let mut on_stack = vec![false; n];
        let mut component_of = vec![UNSET; n];
        let mut sizes: Vec<u32> = Vec::new();
        let mut counter = 0u32;
        let mut stack: Vec<u32> = Vec::new();
        // DFS frames: (node, cursor into its out list).
        let mut frames: Vec<(u32, u32)> = Vec::new();

        for root in 0..n {
            if index[root] != UNSET {
                continue;
            }
            frames.push((root as u32, 0));
            index[root] = counter;
            low[root] = counter;
            counter += 1;
            stack.push(root as u32);
            on_stack[root] = true;

            while let Some(&mut (v, ref mut cursor)) = frames.last_mut() {
                let vu = v as usize;
                let neighbors = if masked(vu) {
                    &[][..]
                } else {
                    self.out_neighbors(vu)
                };
                let mut advanced = false;
                while (*cursor as usize) < neighbors.len() {
                    let w = neighbors[*cursor as usize] as usize;
                    *cursor += 1;
                    if masked(w) {
                        continue;
                    }
                    if index[w] == UNSET {
                        index[w] = counter;
                        low[w] = counter;
                        counter += 1;
                        stack.push(w as u32);
                        on_stack[w] = true;
                        frames.push((w as u32, 0));
                        advanced = true;
                        break;
                    } else if on_stack[w] {
                        low[vu] = low[vu].min(index[w]);
                    }
                }
                if advanced {
                    continue;
                }
                frames.pop();
                if low[vu] == index[vu] {
                    let id = sizes.len() as u32;
                    let mut size = 0u32;
                    loop {
                        let w = stack.pop().expect("tarjan stack underflow");
                        on_stack[w as usize] = false;
                        component_of[w as usize] = id;
                        size += 1;
                        if w as usize == vu {
                            break;
                        }
                    }
                    sizes.push(size);
                }
                if let Some(&mut (p, _)) = frames.last_mut() {
                    let pu = p as usize;
                    low[pu] = low[pu].min(low[vu]);
                }
            }
        }

        SccDecomposition::new(component_of, sizes)
    }
}

fn csr(n: usize, sorted_edges: impl Iterator<Item = (u32, u32)>) -> (Vec<usize>, Vec<u32>) {
    let mut off = vec![0usize; n + 1];
    let mut adj = Vec::new();
    for (u, v) in sorted_edges {
        off[u as usize + 1] += 1;
        adj.push(v);
    }
    for i in 0..n {
        off[i + 1] += off[i];
    }
    (off, adj)
}

fn sorted_union_len(a: &[u32], b: &[u32]) -> usize {
    let (mut i, mut j, mut len) = (0, 0, 0);
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            std::cmp::Ordering::Less => i += 1,
            std::cmp::Ordering::Greater => j += 1,
            std::cmp::Ordering::Equal => {
                i += 1;
                j += 1;
            }
        }
        len += 1;
    }
    len + (a.len() - i) + (b.len() - j)
}

/// A partition of the node set into strongly connected components.
#[derive(Debug, Clone)]
pub struct SccDecomposition {
    component_of: Vec<u32>,
    sizes: Vec<u32>,
    largest: u32,
}

impl SccDecomposition {
    fn new(component_of: Vec<u32>, sizes: Vec<u32>) -> Self {
        // Scanning nodes in ascending order visits components in ascending
        // order of their smallest member, so keeping the first strictly
        // larger component implements the smallest-node tie rule.
        let mut largest = 0u32;
        let mut best = 0u32;
        let mut seen = vec![false; sizes.len()];
        for &c in &component_of {
            if !seen[c as usize] {
                seen[c as usize] = true;
                if sizes[c as usize] > best {
                    best = sizes[c as usize];
                    largest = c;
                }
            }
        }
        SccDecomposition {
            component_of,
            sizes,
            largest,
        }
    }

    pub fn component_of(&self, node: usize) -> usize {
        self.component_of[node] as usize
    }

    pub fn component_count(&self) -> usize {
        self.sizes.len()
    }

    pub fn size(&self, component: usize) -> usize {
        self.sizes[component] as usize
    }

    /// Id of the largest component; ties go to the component containing the
    /// smallest node index.
    pub fn largest_component(&self) -> usize {
        self.largest as usize
    }

    pub fn largest_size(&self) -> usize {
        if self.sizes.is_empty() {
            0
        } else {
            self.sizes[self.largest as usize] as usize
        }
    }

    /// Nodes of one component, ascending.
    pub fn members(&self, component: usize) -> Vec<usize> {
        self.component_of
            .iter()
            .enumerate()
            .filter(|&(_, &c)| c as usize == component)
            .map(|(i, _)| i)
            .collect()
    }
}
