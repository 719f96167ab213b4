//! Corpus parsing and graph construction.
//!
//! A corpus file is UTF-8, one JSON record per line. Each record describes a
//! page: `{"id": …, "title": …, "text": …, "links": [{"target": …, "kind":
//! "intext" | "seealso" | "referencedby"}, …]}`. Pages become nodes; links
//! become edges under the rules of [`build_graph`].

use std::collections::{HashMap, HashSet};
use std::fs::File;
use std::io::{BufRead, BufReader};
use std::path::Path;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::DirectedGraph;

/// Where a link appears on its source page.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum LinkKind {
    /// A link embedded in the page's running text.
    InText,
    /// A link from the page's dedicated related-topics section.
    SeeAlso,
    /// A reverse-pointer link; always redundant with a forward link on the
    /// target page, so it never produces an edge.
    ReferencedBy,
}

/// An outgoing link from one page to another, identified by target page id.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Link {
    pub target: String,
    pub kind: LinkKind,
}

/// One content page of a corpus.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct Page {
    pub id: String,
    pub title: String,
    pub text: String,
    pub links: Vec<Link>,
}

/// Which link kinds survive into the graph.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GraphVariant {
    /// In-text and see-also links both produce edges.
    AllLinks,
    /// Only see-also links produce edges.
    SeeAlsoOnly,
}

impl GraphVariant {
    pub fn as_str(&self) -> &'static str {
        match self {
            GraphVariant::AllLinks => "all",
            GraphVariant::SeeAlsoOnly => "seealso",
        }
    }

    fn keeps(&self, kind: LinkKind) -> bool {
        match (self, kind) {
            (_, LinkKind::ReferencedBy) => false,
            (GraphVariant::AllLinks, _) => true,
            (GraphVariant::SeeAlsoOnly, kind) => kind == LinkKind::SeeAlso,
        }
    }
}

impl FromStr for GraphVariant {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "all" => Ok(GraphVariant::AllLinks),
            "seealso" => Ok(GraphVariant::SeeAlsoOnly),
            other => Err(format!(
                "unknown graph variant {other:?} (expected \"all\" or \"seealso\")"
            )),
        }
    }
}

impl std::fmt::Display for GraphVariant {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Error)]
pub enum CorpusError {
    #[error("line {line}: malformed corpus record: {source}")]
    Malformed {
        line: usize,
        #[source]
        source: serde_json::Error,
    },
    #[error("line {line}: duplicate page id {id:?}")]
    DuplicateId { line: usize, id: String },
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

/// A parsed corpus. Pages are held in lexicographic id order, which is also
/// the node indexing used by every graph built from the corpus.
#[derive(Debug, Clone)]
pub struct Corpus {
    pages: Vec<Page>,
    dropped_dangling_links: usize,
}

impl Corpus {
    /// Parses a corpus from a reader of newline-delimited records.
    ///
    /// Links whose target id does not name any page in the corpus are
    /// dropped; the count of dropped links is retained as a warning tally.
    pub fn parse(reader: impl BufRead) -> Result<Self, CorpusError> {
        let mut pages = Vec::new();
        for (idx, line) in reader.lines().enumerate() {
            let line = line?;
            let number = idx + 1;
            let page: Page =
                serde_json::from_str(&line).map_err(|source| CorpusError::Malformed {
                    line: number,
                    source,
                })?;
            pages.push((number, page));
        }
        Self::assemble(pages)
    }

    /// Parses a corpus file from disk.
    pub fn from_path(path: impl AsRef<Path>) -> Result<Self, CorpusError> {
        Self::parse(BufReader::new(File::open(path)?))
    }

    /// Builds a corpus from already-constructed pages. The "line" reported
    /// for a duplicate id is the 1-based position in the input.
    pub fn from_pages(pages: Vec<Page>) -> Result<Self, CorpusError> {
        Self::assemble(
            pages
                .into_iter()
                .enumerate()
                .map(|(i, p)| (i + 1, p))
                .collect(),
        )
    }

    fn assemble(mut numbered: Vec<(usize, Page)>) -> Result<Self, CorpusError> {
        let mut seen: HashMap<String, usize> = HashMap::with_capacity(numbered.len());
        for (line, page) in &numbered {
            if seen.insert(page.id.clone(), *line).is_some() {
                return Err(CorpusError::DuplicateId {
                    line: *line,
                    id: page.id.clone(),
                });
            }
        }
        let ids: HashSet<&str> = seen.keys().map(String::as_str).collect();
        let mut dropped = 0usize;
        for (_, page) in &mut numbered {
            let before = page.links.len();
            page.links.retain(|link| ids.contains(link.target.as_str()));
            dropped += before - page.links.len();
        }
        let mut pages: Vec<Page> = numbered.into_iter().map(|(_, p)| p).collect();
        pages.sort_by(|a, b| a.id.cmp(&b.id));
        Ok(Corpus {
            pages,
            dropped_dangling_links: dropped,
        })
    }

    /// Pages in lexicographic id order.
    pub fn pages(&self) -> &[Page] {
        &self.pages
    }

    pub fn len(&self) -> usize {
        self.pages.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pages.is_empty()
    }

    /// Number of links discarded at parse time because their target id named
    /// no page in the corpus.
    pub fn dropped_dangling_links(&self) -> usize {
        self.dropped_dangling_links
    }

    /// Node index of the page with the given id, if present.
    pub fn index_of(&self, id: &str) -> Option<usize> {
        self.pages.binary_search_by(|p| p.id.as_str().cmp(id)).ok()
    }
}

/// Builds the directed graph of a corpus under the given variant.
///
/// One node per page, indexed by lexicographic page id. Self-links are
/// ignored, multiple surviving links between the same ordered pair of pages
/// collapse to a single edge, and referenced-by links never produce edges.
pub fn build_graph(corpus: &Corpus, variant: GraphVariant) -> DirectedGraph {
    let labels: Vec<String> = corpus.pages().iter().map(|p| p.id.clone()).collect();
    let mut edges = Vec::new();
    for (i, page) in corpus.pages().iter().enumerate() {
        for link in &page.links {
            if !variant.keeps(link.kind) {
                continue;
            }
            // Targets are resolvable: dangling links were dropped at parse.
            let j = corpus
                .index_of(&link.target)
                .expect("corpus links are resolved at parse time");
            edges.push((i as u32, j as u32));
        }
    }
    DirectedGraph::new(labels, edges)
}
