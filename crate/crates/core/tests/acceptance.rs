//! Acceptance suite: one test per criterion, each printing a PASS line
//! (visible under `--nocapture`). Tolerances are pinned in the assertions.
//!
//!   cargo test --test acceptance -- --nocapture

mod common;

use std::process::Command;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use linkgraph::corpus::{Corpus, Page};
use linkgraph::global::{
    assortativity, average_distance, clustering, gscc_fraction, mean_degrees, DegreeKind,
};
use linkgraph::local::{
    closeness_centralities, hits, pagerank, shortest_path_centralities, Feature, FeatureVector,
    PowerIterationOpts,
};
use linkgraph::percolation::{isolate_run, IsolationSchedule};
use linkgraph::search::{run_keyword_suite, TokenizedCorpus, BUCKET_COUNT, MIN_MATCHES};
use linkgraph::synth::{bernoulli_digraph, erdos_renyi_digraph, power_law_digraph};
use linkgraph::DirectedGraph;

fn opts() -> PowerIterationOpts {
    PowerIterationOpts::default()
}

/// Published (n, m, mean in-degree) rows: mean_degrees must reproduce the
/// ratio m/n to the printed two decimals.
#[test]
fn criterion_1_mean_degree_arithmetic() {
    let rows: [(usize, usize, f64); 5] = [
        (37_723, 688_589, 18.25),
        (15_095, 92_648, 6.14),
        (15_095, 46_965, 3.11),
        (908, 7_527, 8.29),
        (37_723, 21_503, 0.57),
    ];
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    for (n, m, printed) in rows {
        let g = erdos_renyi_digraph(n, m, &mut rng);
        assert_eq!(g.node_count(), n);
        assert_eq!(g.edge_count(), m);
        let d = mean_degrees(&g).unwrap();
        let rounded = (d.mean_in_degree * 100.0).round() / 100.0;
        assert!(
            (rounded - printed).abs() < 1e-9,
            "n={n} m={m}: mean in-degree {} rounds to {rounded}, published {printed}",
            d.mean_in_degree
        );
    }
    println!("criterion 1 (mean-degree arithmetic on published rows): PASS");
}

/// On 200 random digraphs with n ≤ 7, betweenness and stress match
/// exhaustive path enumeration (stress exactly, betweenness within 1e-9);
/// closeness, graph centrality, average distance, and the SCC partition
/// match Floyd–Warshall oracles exactly.
#[test]
fn criterion_2_centrality_oracle_equivalence() {
    let mut rng = ChaCha8Rng::seed_from_u64(2);
    for case in 0..200 {
        let n = 1 + case % 7;
        let p = if case % 2 == 0 { 0.2 } else { 0.5 };
        let g = bernoulli_digraph(n, p, &mut rng);

        let (bw_oracle, stress_oracle) = common::path_centrality_oracle(&g);
        let computed = shortest_path_centralities(&g);
        for i in 0..n {
            assert!(
                (computed.betweenness.values[i] - bw_oracle[i]).abs() <= 1e-9,
                "betweenness mismatch on case {case} node {i}"
            );
            assert_eq!(
                computed.stress.values[i], stress_oracle[i] as f64,
                "stress mismatch on case {case} node {i}"
            );
        }

        let dist = common::floyd_warshall(&g);
        let (closeness_oracle, graph_centrality_oracle) = common::distance_centrality_oracle(&dist);
        let centralities = closeness_centralities(&g);
        assert_eq!(centralities.closeness.values, closeness_oracle);
        assert_eq!(
            centralities.graph_centrality.values,
            graph_centrality_oracle
        );

        let (mean_oracle, pairs_oracle) = common::avg_distance_oracle(&dist);
        let avg = average_distance(&g);
        assert_eq!(avg.mean, mean_oracle);
        assert_eq!(avg.finite_pairs, pairs_oracle);

        assert_eq!(
            common::canonical_partition(&g.scc(), n),
            common::scc_partition_oracle(&g)
        );
    }
    println!("criterion 2 (centrality oracles on 200 digraphs, n ≤ 7): PASS");
}

/// Closed-form fixed points within 1e-9.
#[test]
fn criterion_3_fixed_points() {
    let close = |got: &[f64], want: &[f64]| got.iter().zip(want).all(|(g, w)| (g - w).abs() < 1e-9);

    let two_cycle = DirectedGraph::from_edges(2, &[(0, 1), (1, 0)]);
    let pr = pagerank(&two_cycle, &opts()).unwrap();
    assert!(
        close(&pr.scores.values, &[0.5, 0.5]),
        "{:?}",
        pr.scores.values
    );

    let path = DirectedGraph::from_edges(3, &[(0, 1), (1, 2)]);
    let pr = pagerank(&path, &opts()).unwrap();
    let raw = [0.15, 0.2775, 0.385875];
    let total: f64 = raw.iter().sum();
    let want: Vec<f64> = raw.iter().map(|v| v / total).collect();
    assert!(close(&pr.scores.values, &want), "{:?}", pr.scores.values);

    let star = DirectedGraph::from_edges(3, &[(0, 1), (0, 2)]);
    let scores = hits(&star, &opts()).unwrap();
    assert!(close(&scores.authorities.values, &[0.0, 0.5, 0.5]));
    assert!(close(&scores.hubs.values, &[1.0, 0.0, 0.0]));

    println!("criterion 3 (page-rank and hub/authority fixed points): PASS");
}

/// On 20 random digraphs with n = 50 the authority vector is parallel to
/// the principal eigenvector of AᵀA from an independent dense power method.
#[test]
fn criterion_4_authority_spectral_check() {
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    for case in 0..20 {
        let g = bernoulli_digraph(50, 0.1, &mut rng);
        let scores = hits(&g, &opts()).unwrap();
        let oracle = common::principal_authority_oracle(&g);
        let cosine = common::cosine(&scores.authorities.values, &oracle);
        assert!(
            cosine >= 1.0 - 1e-6,
            "case {case}: authority/eigenvector cosine {cosine}"
        );
    }
    println!("criterion 4 (authority vector parallel to AᵀA eigenvector): PASS");
}

/// Bounds and the Pearson oracle on 1000 random digraphs.
#[test]
fn criterion_5_global_metric_bounds() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for case in 0..1000 {
        let n = 1 + case % 30;
        let p = 0.05 + 0.45 * (case % 7) as f64 / 6.0;
        let g = bernoulli_digraph(n, p, &mut rng);

        let d = mean_degrees(&g).unwrap();
        assert!(d.mean_in_degree <= d.mean_degree + 1e-12);
        assert!(d.mean_degree <= 2.0 * d.mean_in_degree + 1e-12);

        let c = clustering(&g).coefficient;
        assert!((0.0..=1.0).contains(&c), "clustering {c} out of range");

        let s = gscc_fraction(&g);
        assert!(s >= 1.0 / n as f64 - 1e-12 && s <= 1.0, "gscc fraction {s}");

        for (tail, head, tail_in, head_in) in [
            (DegreeKind::Out, DegreeKind::In, false, true),
            (DegreeKind::In, DegreeKind::Out, true, false),
            (DegreeKind::Out, DegreeKind::Out, false, false),
            (DegreeKind::In, DegreeKind::In, true, true),
        ] {
            let computed = assortativity(&g, tail, head);
            if let Some(r) = computed {
                assert!(
                    (-1.0 - 1e-12..=1.0 + 1e-12).contains(&r),
                    "assortativity {r}"
                );
            }
            let (alphas, betas) = common::edge_degree_sequences(&g, tail_in, head_in);
            match (computed, common::pearson_two_pass(&alphas, &betas)) {
                (Some(a), Some(b)) => {
                    assert!((a - b).abs() < 1e-12, "case {case}: {a} vs oracle {b}")
                }
                (a, b) => assert_eq!(a, b, "case {case}: definedness disagrees"),
            }
        }
    }
    println!("criterion 5 (global bounds and Pearson oracle on 1000 digraphs): PASS");
}

/// Percolation: targeted-by-degree beats random on heavy-tailed graphs in at
/// least 9 of 10 seeded repetitions, and a directed ER graph with mean
/// degree 2 has a giant component intact (S > 0.5) that random isolation of
/// 75% of the nodes destroys (S < 0.05). Random breakdown fractions are
/// seed-consistent within ±0.1.
#[test]
fn criterion_6_percolation_behavior() {
    let o = opts();

    let mut targeted_wins = 0;
    for rep in 0..10u64 {
        let mut rng = ChaCha8Rng::seed_from_u64(600 + rep);
        let g = power_law_digraph(10_000, 2.5, 100, 0.2, &mut rng);
        let targeted = isolate_run(
            &g,
            &IsolationSchedule::Targeted {
                feature: Feature::Degree,
                recompute_every: None,
            },
            &o,
        )
        .unwrap();
        let random = isolate_run(
            &g,
            &IsolationSchedule::Random {
                seed: 7000 + rep,
                trials: 10,
            },
            &o,
        )
        .unwrap();
        if targeted.breakdown_fraction < random.breakdown_fraction {
            targeted_wins += 1;
        }
    }
    assert!(
        targeted_wins >= 9,
        "targeted-by-degree beat random in only {targeted_wins}/10 repetitions"
    );

    let mut rng = ChaCha8Rng::seed_from_u64(660);
    let g = erdos_renyi_digraph(10_000, 20_000, &mut rng);
    let intact = gscc_fraction(&g);
    assert!(intact > 0.5, "intact giant component fraction {intact}");

    let run_a = isolate_run(
        &g,
        &IsolationSchedule::Random {
            seed: 11,
            trials: 10,
        },
        &o,
    )
    .unwrap();
    let run_b = isolate_run(
        &g,
        &IsolationSchedule::Random {
            seed: 99,
            trials: 10,
        },
        &o,
    )
    .unwrap();
    assert!(
        (run_a.breakdown_fraction - run_b.breakdown_fraction).abs() <= 0.1,
        "breakdown fractions {} vs {} differ across seeds",
        run_a.breakdown_fraction,
        run_b.breakdown_fraction
    );

    // S at 75% isolated; trials already finished hold their final value.
    let step = 7_500;
    let at_75 = run_a
        .points
        .get(step - 1)
        .or(run_a.points.last())
        .map(|p| p.gscc_fraction)
        .unwrap();
    assert!(at_75 < 0.05, "S = {at_75} after isolating 75% of nodes");

    println!("criterion 6 (targeted beats random {targeted_wins}/10; ER giant component: intact S = {intact:.3}, S(75%) = {at_75:.5}): PASS");
}

/// Planted-relevance search evaluation: the drop rule removes exactly the
/// keywords with too few matches, the relevant sets match an exhaustive
/// vote-counting oracle, and the designated feature's curve is 1.0 in every
/// defined bucket.
#[test]
fn criterion_7_search_eval_end_to_end() {
    let (corpus, features, keywords, expected) = planted_corpus();
    let tokens = TokenizedCorpus::new(&corpus);

    // Per-query relevant sets against the independent tally.
    for q in &expected {
        let matches = tokens.match_keyword(&q.keyword);
        assert_eq!(matches.len(), q.matches, "match count for {}", q.keyword);
        let relevant = linkgraph::search::relevant_set(&matches, &features);
        assert_eq!(
            relevant,
            common::vote_oracle(&matches, &features),
            "vote oracle disagrees on {}",
            q.keyword
        );
        if q.matches > MIN_MATCHES {
            // The rotation construction gives every match a seat in at
            // least six top-ten lists.
            assert_eq!(relevant, matches, "planted queries elect every match");
        }
    }

    let outcome = run_keyword_suite(&tokens, &features, &keywords, 100).unwrap();
    let should_drop: Vec<&str> = expected
        .iter()
        .filter(|q| q.matches <= MIN_MATCHES)
        .map(|q| q.keyword.as_str())
        .collect();
    let dropped: Vec<&str> = outcome.dropped.iter().map(|d| d.keyword.as_str()).collect();
    assert_eq!(
        dropped, should_drop,
        "drop rule must remove exactly the small queries"
    );
    assert_eq!(outcome.evaluated.len(), expected.len() - should_drop.len());

    // Every feature front-loads the (full-match) relevant sets here, so the
    // designated feature's curve must be exactly 1.0 wherever defined.
    let designated = &outcome.curves[0];
    let mut defined = 0;
    for bucket in 0..BUCKET_COUNT {
        if let Some(mean) = designated.mean(bucket) {
            defined += 1;
            assert_eq!(mean, 1.0, "bucket {bucket} mean {mean}");
        }
    }
    assert!(defined > 0, "at least one bucket must be defined");

    println!("criterion 7 (planted search evaluation, {defined} defined buckets at 1.0): PASS");
}

struct PlantedQuery {
    keyword: String,
    matches: usize,
}

/// 600 pages and 20 keywords; keyword q matches a dedicated block of pages.
/// Fifteen keywords get 11–13 matches, five get ≤ 10 and must be dropped.
/// Feature j ranks the block of every large query by a rotation of a strict
/// ordering, so each match reaches the top ten of at least seven lists and
/// the relevant set equals the whole match set.
fn planted_corpus() -> (Corpus, Vec<FeatureVector>, Vec<String>, Vec<PlantedQuery>) {
    const PAGES: usize = 600;
    let small_sizes = [1usize, 5, 10, 10, 2];

    let mut texts: Vec<String> = (0..PAGES)
        .map(|i| format!("filler prose for entry number {i}"))
        .collect();
    let mut values = vec![vec![0.0f64; PAGES]; 10];
    let mut keywords = Vec::new();
    let mut expected = Vec::new();

    let mut next_page = 0usize;
    let mut small_cursor = 0usize;
    for q in 0..20 {
        let keyword = format!("topic{q:02}");
        let size = if q % 4 == 3 {
            let s = small_sizes[small_cursor];
            small_cursor += 1;
            s
        } else {
            11 + q % 3
        };
        for i in 0..size {
            let node = next_page + i;
            texts[node].push_str(&format!(" discusses {keyword} at length"));
            for (j, feature_values) in values.iter_mut().enumerate() {
                // Rotated strict ranking: distinct values 1..=size.
                feature_values[node] = (size - (i + j) % size) as f64;
            }
        }
        expected.push(PlantedQuery {
            keyword: keyword.clone(),
            matches: size,
        });
        keywords.push(keyword);
        next_page += size;
    }
    assert!(next_page <= PAGES);

    let pages: Vec<Page> = texts
        .into_iter()
        .enumerate()
        .map(|(i, text)| Page {
            id: format!("p{i:03}"),
            title: format!("Entry {i:03}"),
            text,
            links: Vec::new(),
        })
        .collect();
    let corpus = Corpus::from_pages(pages).unwrap();
    let features = Feature::ALL
        .iter()
        .zip(values)
        .map(|(&feature, values)| FeatureVector { feature, values })
        .collect();
    (corpus, features, keywords, expected)
}

/// Reruns of every subcommand with identical configuration produce
/// byte-identical outputs at any thread-count setting.
#[test]
fn criterion_8_byte_identical_reruns() {
    let dir = tempfile::Builder::new()
        .prefix("linkgraph-determinism")
        .tempdir_in(env!("CARGO_TARGET_TMPDIR"))
        .unwrap();
    let corpus = common::write_corpus(dir.path(), "corpus.jsonl", &common::keyword_corpus());
    let corpus = corpus.to_str().unwrap();
    let keywords_path = dir.path().join("keywords.txt");
    std::fs::write(&keywords_path, "topic\nword\ngemstone\n").unwrap();
    let keywords = keywords_path.to_str().unwrap();

    let invocations: Vec<Vec<&str>> = vec![
        vec!["ingest", "--corpus", corpus, "--deterministic"],
        vec!["graph", "stats", "--corpus", corpus, "--deterministic"],
        vec!["global", "--corpus", corpus, "--deterministic"],
        vec![
            "global",
            "--corpus",
            corpus,
            "--deterministic",
            "--format",
            "json",
        ],
        vec![
            "local",
            "--corpus",
            corpus,
            "--feature",
            "betweenness",
            "--deterministic",
        ],
        vec![
            "local",
            "--corpus",
            corpus,
            "--feature",
            "pagerank",
            "--deterministic",
        ],
        vec![
            "local",
            "--corpus",
            corpus,
            "--feature",
            "hub",
            "--deterministic",
            "--variant",
            "seealso",
        ],
        vec![
            "ccd",
            "--corpus",
            corpus,
            "--feature",
            "in-degree",
            "--deterministic",
        ],
        vec![
            "percolate",
            "--corpus",
            corpus,
            "--schedule",
            "random",
            "--trials",
            "4",
            "--seed",
            "3",
            "--deterministic",
        ],
        vec![
            "percolate",
            "--corpus",
            corpus,
            "--schedule",
            "stress",
            "--deterministic",
        ],
        vec![
            "search-eval",
            "--corpus",
            corpus,
            "--keywords",
            keywords,
            "--deterministic",
            "--format",
            "json",
        ],
    ];

    for (case, invocation) in invocations.iter().enumerate() {
        let mut outputs: Vec<(Vec<u8>, Vec<u8>)> = Vec::new();
        for (run, threads) in [(0, "1"), (1, "2"), (2, "1"), (3, "4")] {
            let out_path = dir.path().join(format!("case{case}-run{run}.out"));
            let drops_path = dir.path().join(format!("case{case}-run{run}.drops.json"));
            let mut args: Vec<&str> = invocation.clone();
            args.push("--threads");
            args.push(threads);
            args.push("--output");
            args.push(out_path.to_str().unwrap());
            let drops = args[0] == "search-eval";
            let drops_str = drops_path.to_str().unwrap().to_string();
            if drops {
                args.push("--drop-report");
                args.push(&drops_str);
            }
            let status = Command::new(env!("CARGO_BIN_EXE_linkgraph"))
                .args(&args)
                .status()
                .expect("binary runs");
            assert!(status.success(), "{invocation:?} failed");
            let body = std::fs::read(&out_path).unwrap();
            let report = if drops {
                std::fs::read(&drops_path).unwrap()
            } else {
                Vec::new()
            };
            outputs.push((body, report));
        }
        for run in 1..outputs.len() {
            assert_eq!(
                outputs[0], outputs[run],
                "outputs of {invocation:?} differ between reruns/thread counts"
            );
        }
    }
    println!("criterion 8 (byte-identical reruns across thread counts): PASS");
}
