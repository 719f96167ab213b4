//! Directed-graph analytics for hyperlink corpora.
//!
//! `linkgraph` ingests a corpus of pages with typed links, builds simple
//! directed graphs from them, and measures the graphs the way the
//! complex-networks literature does:
//!
//! - [`corpus`]: corpus file parsing and edge rules (link kinds, graph
//!   variants, self-loop and duplicate-edge removal).
//! - [`graph`]: immutable CSR graph with degrees, BFS distances,
//!   reachability, and strongly connected components.
//! - [`global`]: graph-wide scalars — mean degrees, GSCC fraction, average
//!   directed distance, clustering, degree assortativity.
//! - [`local`]: ten per-node features (degrees, shortest-path centralities,
//!   hub/authority scores, page rank) and their complementary cumulative
//!   distributions.
//! - [`percolation`]: node-isolation experiments tracking the decay of the
//!   largest strongly connected component.
//! - [`search`]: keyword retrieval ranked by local features, with
//!   majority-vote relevant sets and bucketed Precision-Recall curves.
//! - [`synth`]: seeded random-graph generators for experiments and tests.
//!
//! Each major capability has a runnable example under `examples/`; the
//! `linkgraph` binary exposes the same pipeline as subcommands.

pub mod cli;
pub mod corpus;
pub mod global;
pub mod graph;
pub mod local;
pub mod output;
pub mod percolation;
pub mod search;
pub mod synth;

pub use corpus::{build_graph, Corpus, GraphVariant, Link, LinkKind, Page};
pub use graph::{DirectedGraph, SccDecomposition};
pub use local::{Feature, FeatureVector, PowerIterationOpts};
