//! Keyword-search evaluation.
//!
//! For a query keyword, the answer list is the set of pages whose title or
//! body contains the keyword, ranked by one local feature. Lacking expert
//! judgments, the relevant set is elected by the features themselves: a node
//! is relevant when it reaches the top ten of at least six of the ten
//! feature-sorted match lists. Precision/Recall points from many queries are
//! averaged inside eleven recall buckets `[0, 0.1), …, [0.9, 1), [1, 1]`.
//!
//! Matching is case-insensitive over Unicode tokens split at non-alphanumeric
//! boundaries; multi-word keywords must appear as a contiguous token run, so
//! `"graph"` does not match `"subgraph"`.

use std::collections::HashMap;

use thiserror::Error;

use crate::corpus::Corpus;
use crate::local::{Feature, FeatureVector};

/// Matches appear in at least six of ten top-ten lists.
const MAJORITY_VOTES: usize = 6;
const TOP_LIST_LEN: usize = 10;
/// Queries matching at most this many pages are dropped.
pub const MIN_MATCHES: usize = 10;

/// Number of recall buckets in a [`PrCurve`].
pub const BUCKET_COUNT: usize = 11;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum SearchError {
    #[error("no query survived the drop rule")]
    AllQueriesDropped,
}

/// A corpus tokenized once for repeated keyword matching. Token ids are
/// interned strings; page order (and therefore node indexing) matches the
/// corpus.
pub struct TokenizedCorpus {
    pages: Vec<Vec<u32>>,
    vocabulary: HashMap<String, u32>,
    labels: Vec<String>,
}

/// Lowercased alphanumeric tokens of a text.
pub fn tokenize(text: &str) -> impl Iterator<Item = String> + '_ {
    text.split(|c: char| !c.is_alphanumeric())
        .filter(|t| !t.is_empty())
        .map(str::to_lowercase)
}

impl TokenizedCorpus {
    /// Tokenizes every page's title and body.
    pub fn new(corpus: &Corpus) -> Self {
        let mut vocabulary: HashMap<String, u32> = HashMap::new();
        let mut pages = Vec::with_capacity(corpus.len());
        for page in corpus.pages() {
            let mut tokens = Vec::new();
            for token in tokenize(&page.title).chain(tokenize(&page.text)) {
                let next_id = vocabulary.len() as u32;
                let id = *vocabulary.entry(token).or_insert(next_id);
                tokens.push(id);
            }
            pages.push(tokens);
        }
        let labels = corpus.pages().iter().map(|p| p.id.clone()).collect();
        TokenizedCorpus {
            pages,
            vocabulary,
            labels,
        }
    }

    pub fn len(&self) -> usize {
        self.pages.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pages.is_empty()
    }

    pub fn label(&self, node: usize) -> &str {
        &self.labels[node]
    }

    /// Nodes whose text contains the keyword as a contiguous token sequence,
    /// ascending. An empty or token-free keyword matches nothing.
    pub fn match_keyword(&self, keyword: &str) -> Vec<usize> {
        let mut needle = Vec::new();
        for token in tokenize(keyword) {
            match self.vocabulary.get(&token) {
                Some(&id) => needle.push(id),
                None => return Vec::new(),
            }
        }
        if needle.is_empty() {
            return Vec::new();
        }
        self.pages
            .iter()
            .enumerate()
            .filter(|(_, tokens)| tokens.windows(needle.len()).any(|w| w == needle))
            .map(|(i, _)| i)
            .collect()
    }
}

/// The matching nodes sorted by nonincreasing feature value, ties broken by
/// ascending node index.
pub fn answer_list(matches: &[usize], feature: &FeatureVector) -> Vec<usize> {
    let mut list = matches.to_vec();
    list.sort_by(|&a, &b| {
        feature.values[b]
            .partial_cmp(&feature.values[a])
            .unwrap()
            .then(a.cmp(&b))
    });
    list
}

/// Majority-vote relevant set over ten feature-sorted lists.
///
/// Queries with at most [`MIN_MATCHES`] matches return an empty set, marking
/// the query dropped; this keeps the relevant set from trivially equaling
/// the whole match set.
pub fn relevant_set(matches: &[usize], features: &[FeatureVector]) -> Vec<usize> {
    assert_eq!(
        features.len(),
        Feature::ALL.len(),
        "one vector per local feature"
    );
    if matches.len() <= MIN_MATCHES {
        return Vec::new();
    }
    let mut votes: HashMap<usize, usize> = HashMap::new();
    for feature in features {
        for &node in answer_list(matches, feature).iter().take(TOP_LIST_LEN) {
            *votes.entry(node).or_insert(0) += 1;
        }
    }
    let mut relevant: Vec<usize> = matches
        .iter()
        .copied()
        .filter(|node| votes.get(node).copied().unwrap_or(0) >= MAJORITY_VOTES)
        .collect();
    relevant.sort_unstable();
    relevant
}

/// Precision and Recall over every answer-list prefix, kept alongside the
/// integer hit counts they derive from so recall bucketing stays exact.
#[derive(Debug, Clone, PartialEq)]
pub struct PrPoints {
    pub precision: Vec<f64>,
    pub recall: Vec<f64>,
    hits: Vec<u64>,
    relevant: u64,
}

/// Evaluates Precision/Recall at `k = 1..=|answers|`. Returns `None` when
/// the relevant set is empty (a dropped query).
pub fn precision_recall(answers: &[usize], relevant: &[usize]) -> Option<PrPoints> {
    if relevant.is_empty() {
        return None;
    }
    let total = relevant.len() as u64;
    let mut hits = 0u64;
    let mut points = PrPoints {
        precision: Vec::with_capacity(answers.len()),
        recall: Vec::with_capacity(answers.len()),
        hits: Vec::with_capacity(answers.len()),
        relevant: total,
    };
    for (k, node) in answers.iter().enumerate() {
        if relevant.binary_search(node).is_ok() {
            hits += 1;
        }
        points.precision.push(hits as f64 / (k + 1) as f64);
        points.recall.push(hits as f64 / total as f64);
        points.hits.push(hits);
    }
    Some(points)
}

/// Mean Precision per recall bucket, with per-bucket contribution counts.
#[derive(Debug, Clone, Default)]
pub struct PrCurve {
    sums: [f64; BUCKET_COUNT],
    counts: [u64; BUCKET_COUNT],
}

impl PrCurve {
    /// Recall abscissa of a bucket: 0, 0.1, …, 1.
    pub fn abscissa(bucket: usize) -> f64 {
        bucket as f64 / 10.0
    }

    /// Mean Precision of a bucket, or `None` when nothing landed in it.
    pub fn mean(&self, bucket: usize) -> Option<f64> {
        (self.counts[bucket] > 0).then(|| self.sums[bucket] / self.counts[bucket] as f64)
    }

    pub fn count(&self, bucket: usize) -> u64 {
        self.counts[bucket]
    }

    /// Adds every `(Precision, Recall)` point of one query. Buckets are
    /// half-open with recall 1 landing exclusively in the final bucket;
    /// membership is decided on the integer counts, so boundary recalls are
    /// classified exactly.
    pub fn add_query(&mut self, points: &PrPoints) {
        for (k, &hits) in points.hits.iter().enumerate() {
            let bucket = if hits == points.relevant {
                BUCKET_COUNT - 1
            } else {
                (10 * hits / points.relevant) as usize
            };
            self.sums[bucket] += points.precision[k];
            self.counts[bucket] += 1;
        }
    }
}

/// Averages many queries' points into one curve. Errors when no query
/// contributed.
pub fn bucketed_curve(queries: &[PrPoints]) -> Result<PrCurve, SearchError> {
    if queries.is_empty() {
        return Err(SearchError::AllQueriesDropped);
    }
    let mut curve = PrCurve::default();
    for q in queries {
        curve.add_query(q);
    }
    Ok(curve)
}

/// Why a query produced no Precision/Recall data.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DropReason {
    /// At most [`MIN_MATCHES`] pages matched.
    TooFewMatches,
    /// Enough matches, but no node won a majority of the vote lists.
    EmptyRelevantSet,
}

impl DropReason {
    pub fn as_str(&self) -> &'static str {
        match self {
            DropReason::TooFewMatches => "too-few-matches",
            DropReason::EmptyRelevantSet => "empty-relevant-set",
        }
    }
}

/// A query that was evaluated.
#[derive(Debug, Clone)]
pub struct EvaluatedQuery {
    pub keyword: String,
    pub matched: usize,
    pub relevant: usize,
}

/// A query that was dropped.
#[derive(Debug, Clone)]
pub struct DroppedQuery {
    pub keyword: String,
    pub matched: usize,
    pub reason: DropReason,
}

/// Result of a whole keyword suite: one curve per feature in
/// [`Feature::ALL`] order, plus the evaluation/drop report.
pub struct SuiteOutcome {
    pub curves: Vec<PrCurve>,
    pub evaluated: Vec<EvaluatedQuery>,
    pub dropped: Vec<DroppedQuery>,
}

/// Runs keywords in file order, keeping at most `limit` queries that clear
/// the drop rule, and evaluates all ten features on each kept query.
///
/// Errors if no query at all survives.
pub fn run_keyword_suite(
    corpus: &TokenizedCorpus,
    features: &[FeatureVector],
    keywords: &[String],
    limit: usize,
) -> Result<SuiteOutcome, SearchError> {
    assert_eq!(
        features.len(),
        Feature::ALL.len(),
        "one vector per local feature"
    );
    let mut curves: Vec<PrCurve> = (0..features.len()).map(|_| PrCurve::default()).collect();
    let mut evaluated = Vec::new();
    let mut dropped = Vec::new();

    for keyword in keywords {
        if evaluated.len() >= limit {
            break;
        }
        let matches = corpus.match_keyword(keyword);
        if matches.len() <= MIN_MATCHES {
            dropped.push(DroppedQuery {
                keyword: keyword.clone(),
                matched: matches.len(),
                reason: DropReason::TooFewMatches,
            });
            continue;
        }
        let relevant = relevant_set(&matches, features);
        if relevant.is_empty() {
            dropped.push(DroppedQuery {
                keyword: keyword.clone(),
                matched: matches.len(),
                reason: DropReason::EmptyRelevantSet,
            });
            continue;
        }
        for (feature_idx, feature) in features.iter().enumerate() {
            let answers = answer_list(&matches, feature);
            let points = precision_recall(&answers, &relevant)
                .expect("relevant set is nonempty for evaluated queries");
            curves[feature_idx].add_query(&points);
        }
        evaluated.push(EvaluatedQuery {
            keyword: keyword.clone(),
            matched: matches.len(),
            relevant: relevant.len(),
        });
    }

    if evaluated.is_empty() {
        return Err(SearchError::AllQueriesDropped);
    }
    Ok(SuiteOutcome {
        curves,
        evaluated,
        dropped,
    })
}
