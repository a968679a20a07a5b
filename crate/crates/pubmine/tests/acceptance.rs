//! Acceptance suite: one test per release criterion.
//!
//! Each test checks the implementation against an independent oracle (a
//! brute-force reimplementation, an exhaustive search, or a hand-computed
//! fixture) and ends by printing `acceptance NN (<name>): pass`. Run with
//! `cargo test --test acceptance -- --nocapture` to see the lines.

use std::collections::{BTreeMap, BTreeSet};
use std::path::{Path, PathBuf};
use std::process::Command as Process;
use std::time::Instant;

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use pubmine::corpus::parse_corpus_from_path;
use pubmine::keyphrase::YearKey;
use pubmine::topic_focus::parse_exclusions;
use pubmine::{
    build_cooccurrence, build_index, corpus_stats, detect_communities, extract_ngrams,
    latest_terms, modularity, multi_term_publications, select_topic_terms, term_publication_graph,
    tokenize, BipartiteGraph, Community, CooccurrenceGraph, Corpus, ExtractionConfig,
    GraphDocument, LatestConfig, LatestTerm, NodeKind, Posting, Publication, StatsReport,
    TopicSelection,
};

fn pass(n: u32, name: &str) {
    println!("acceptance {n:02} ({name}): pass");
}

fn fixture(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("tests/fixtures")
        .join(name)
}

// ---------------------------------------------------------------------------
// 1. N-gram extraction vs. brute-force window enumeration.
// ---------------------------------------------------------------------------

/// Oracle: every length-n window of the raw token sequence whose tokens are
/// all non-stopwords, with no notion of runs. A window is stopword-free
/// exactly when it lies inside a maximal stopword-free run, so this must
/// agree with the run-based extractor.
fn oracle_windows(tokens: &[String], config: &ExtractionConfig) -> Vec<String> {
    let mut out = Vec::new();
    for n in config.ngram_min..=config.ngram_max {
        for window in tokens.windows(n) {
            if window.iter().all(|t| !config.is_stopword(t)) {
                out.push(window.join(" "));
            }
        }
    }
    out
}

#[test]
fn acceptance_01_ngram_oracle() {
    let start = Instant::now();
    // 12-token alphabet, half of it stopwords, two hyphenated terms.
    let vocab = [
        "ALPHA", "BETA", "GAMMA-X", "DELTA", "EPSILON-2B", "ZETA", "THE", "OF", "AND", "IN",
        "WITH", "FOR",
    ];
    let ranges = [(1, 1), (1, 2), (1, 3), (2, 3), (3, 3)];
    let mut rng = StdRng::seed_from_u64(0xA1);
    for case in 0..200 {
        let len = rng.random_range(0..=40);
        let tokens: Vec<String> = (0..len)
            .map(|_| vocab[rng.random_range(0..vocab.len())].to_string())
            .collect();
        let (ngram_min, ngram_max) = ranges[case % ranges.len()];
        let config = ExtractionConfig {
            ngram_min,
            ngram_max,
            ..ExtractionConfig::default()
        };
        let mut fast = extract_ngrams(&tokens, &config);
        let mut slow = oracle_windows(&tokens, &config);
        fast.sort();
        slow.sort();
        assert_eq!(fast, slow, "case {case}, range {ngram_min}..={ngram_max}, tokens {tokens:?}");
    }
    assert!(start.elapsed().as_secs_f64() < 1.0, "took {:?}", start.elapsed());
    pass(1, "n-gram window oracle, 200 random sequences");
}

// ---------------------------------------------------------------------------
// 2. Index construction vs. a sequential full-rescan oracle.
// ---------------------------------------------------------------------------

fn synthetic_corpus(doc_count: usize, seed: u64) -> Corpus {
    let content = [
        "marker-a", "marker-b", "signal", "pathway", "cell-line", "genome", "viral", "host-range",
        "spread", "mutation",
    ];
    let stops = ["the", "of", "and", "in", "with", "for"];
    let mut rng = StdRng::seed_from_u64(seed);
    let mut docs = Vec::new();
    for i in 0..doc_count {
        let mut words = Vec::new();
        for _ in 0..rng.random_range(6..=30) {
            if rng.random_bool(0.4) {
                words.push(stops[rng.random_range(0..stops.len())]);
            } else {
                words.push(content[rng.random_range(0..content.len())]);
            }
        }
        let split = words.len() / 2;
        let abstract_text = if rng.random_bool(0.8) {
            Some(words[split..].join(" "))
        } else {
            None
        };
        docs.push(Publication {
            id: format!("D{i:03}"),
            title: words[..split].join(" "),
            abstract_text,
            authors: vec![],
            venue: None,
            year: if rng.random_bool(0.85) {
                Some(rng.random_range(2000..=2020))
            } else {
                None
            },
            doi: None,
        });
    }
    Corpus::from_publications(docs).unwrap()
}

/// Oracle: rebuild every posting one document at a time, using the window
/// enumeration above plus the composed-term rule, with no parallelism and no
/// shared code beyond the tokenizer.
fn oracle_entries(corpus: &Corpus, config: &ExtractionConfig) -> BTreeMap<String, Posting> {
    let mut entries: BTreeMap<String, Posting> = BTreeMap::new();
    for p in corpus.publications() {
        let mut tokens = tokenize(&p.title);
        if let Some(a) = &p.abstract_text {
            tokens.extend(tokenize(a));
        }
        let mut counts: BTreeMap<String, u64> = BTreeMap::new();
        for phrase in oracle_windows(&tokens, config) {
            *counts.entry(phrase).or_insert(0) += 1;
        }
        for token in &tokens {
            let counted_as_unigram = config.ngram_min == 1 && !config.is_stopword(token);
            if token.contains('-') && !counted_as_unigram {
                *counts.entry(token.clone()).or_insert(0) += 1;
            }
        }
        for (phrase, count) in counts {
            let posting = entries.entry(phrase).or_default();
            posting.doc_ids.insert(p.id.clone());
            *posting
                .count_by_year
                .entry(YearKey::from_year(p.year))
                .or_insert(0) += count;
            posting.total_count += count;
        }
    }
    entries.retain(|_, p| p.doc_ids.len() >= config.min_doc_frequency);
    entries
}

#[test]
fn acceptance_02_index_oracle() {
    let start = Instant::now();
    let corpus = synthetic_corpus(50, 0xA2);
    for min_doc_frequency in [1, 2, 3] {
        let config = ExtractionConfig {
            min_doc_frequency,
            ..ExtractionConfig::default()
        };
        let index = build_index(&corpus, &config);
        assert_eq!(index.entries, oracle_entries(&corpus, &config), "min_df {min_doc_frequency}");
        assert_eq!(index.documents.len(), 50);
    }
    assert!(start.elapsed().as_secs_f64() < 5.0, "took {:?}", start.elapsed());
    pass(2, "index full-rescan oracle, 50 documents");
}

// ---------------------------------------------------------------------------
// 3. Co-occurrence weights vs. a document-driven pair count.
// ---------------------------------------------------------------------------

#[test]
fn acceptance_03_cooccurrence_oracle() {
    let corpus = synthetic_corpus(50, 0xA2);
    let config = ExtractionConfig {
        min_doc_frequency: 2,
        ..ExtractionConfig::default()
    };
    let index = build_index(&corpus, &config);
    let terms: BTreeSet<String> = index.entries.keys().take(20).cloned().collect();
    assert_eq!(terms.len(), 20, "corpus must offer at least 20 phrases");
    let graph = build_cooccurrence(&index, &terms).unwrap();

    // Oracle: walk the documents instead of the term pairs; every document
    // containing k selected terms contributes one count to each of its
    // C(k, 2) pairs.
    let list: Vec<&String> = terms.iter().collect();
    let mut expected: BTreeMap<(String, String), u64> = BTreeMap::new();
    for doc in index.documents.keys() {
        let here: Vec<&String> = list
            .iter()
            .copied()
            .filter(|t| index.entries[*t].doc_ids.contains(doc))
            .collect();
        for i in 0..here.len() {
            for j in (i + 1)..here.len() {
                *expected
                    .entry((here[i].clone(), here[j].clone()))
                    .or_insert(0) += 1;
            }
        }
    }
    let actual: BTreeMap<(String, String), u64> = graph
        .edges()
        .map(|(a, b, w)| ((a.to_string(), b.to_string()), w))
        .collect();
    assert_eq!(actual, expected);
    assert_eq!(graph.node_count(), 20);
    pass(3, "co-occurrence weights vs. document-driven oracle");
}

// ---------------------------------------------------------------------------
// 4. Community detection vs. exhaustive modularity maximization.
// ---------------------------------------------------------------------------

/// Visits every set partition of `n` elements as a restricted-growth string
/// (element i's community id, with id k+1 never appearing before id k).
fn for_each_partition(n: usize, mut f: impl FnMut(&[usize])) {
    let mut a = vec![0usize; n];
    loop {
        f(&a);
        let mut i = n - 1;
        loop {
            if i == 0 {
                return;
            }
            let max_prev = *a[..i].iter().max().unwrap();
            if a[i] <= max_prev {
                a[i] += 1;
                for v in &mut a[i + 1..] {
                    *v = 0;
                }
                break;
            }
            i -= 1;
        }
    }
}

/// Modularity computed from raw edge lists, independent of the graph types.
fn oracle_modularity(node_count: usize, edges: &[(usize, usize, u64)], assign: &[usize]) -> f64 {
    let two_m: u64 = edges.iter().map(|(_, _, w)| 2 * w).sum();
    if two_m == 0 {
        return 0.0;
    }
    let mut degree = vec![0u64; node_count];
    for &(i, j, w) in edges {
        degree[i] += w;
        degree[j] += w;
    }
    let community_count = assign.iter().max().unwrap() + 1;
    let mut internal = vec![0u64; community_count];
    let mut total = vec![0u64; community_count];
    for &(i, j, w) in edges {
        if assign[i] == assign[j] {
            internal[assign[i]] += w;
        }
    }
    for (node, &c) in assign.iter().enumerate() {
        total[c] += degree[node];
    }
    let m = two_m as f64 / 2.0;
    (0..community_count)
        .map(|c| internal[c] as f64 / m - (total[c] as f64 / two_m as f64).powi(2))
        .sum()
}

#[test]
fn acceptance_04_community_oracle() {
    // (a) Two 4-cliques joined by a unit bridge come back as the two cliques.
    let mut bridged = CooccurrenceGraph::new();
    let left = ["A1", "A2", "A3", "A4"];
    let right = ["B1", "B2", "B3", "B4"];
    for clique in [&left, &right] {
        for i in 0..clique.len() {
            for j in (i + 1)..clique.len() {
                bridged.add_edge(clique[i], clique[j], 1);
            }
        }
    }
    bridged.add_edge("A1", "B1", 1);
    let communities = detect_communities(&bridged);
    let expected: Vec<Community> = [&left[..], &right[..]]
        .iter()
        .enumerate()
        .map(|(id, members)| Community {
            id,
            members: members.iter().map(|m| m.to_string()).collect(),
        })
        .collect();
    assert_eq!(communities, expected);

    // (b) On every graph small enough to enumerate all Bell(n) partitions,
    // the detected partition reaches the exhaustive maximum modularity.
    let mut rng = StdRng::seed_from_u64(0xA4);
    for case in 0..40 {
        let n = 2 + case % 7; // 2..=8 nodes
        let labels: Vec<String> = (0..n).map(|i| format!("N{i}")).collect();
        let mut edges = Vec::new();
        let mut graph = CooccurrenceGraph::new();
        for label in &labels {
            graph.add_node(label.clone());
        }
        for i in 0..n {
            for j in (i + 1)..n {
                if rng.random_bool(0.5) {
                    let w = rng.random_range(1..=4);
                    edges.push((i, j, w));
                    graph.add_edge(labels[i].clone(), labels[j].clone(), w);
                }
            }
        }

        let communities = detect_communities(&graph);
        let mut assign = vec![usize::MAX; n];
        for community in &communities {
            for member in &community.members {
                let node: usize = member[1..].parse().unwrap();
                assign[node] = community.id;
            }
        }
        let detected = oracle_modularity(n, &edges, &assign);
        // Cross-check the library's own modularity on the same partition.
        assert!((modularity(&graph, &communities) - detected).abs() < 1e-12);

        let mut best = f64::NEG_INFINITY;
        for_each_partition(n, |candidate| {
            let q = oracle_modularity(n, &edges, candidate);
            if q > best {
                best = q;
            }
        });
        assert!(
            (best - detected).abs() < 1e-12,
            "case {case}: detected {detected}, exhaustive best {best}, edges {edges:?}"
        );
    }
    pass(4, "community detection vs. exhaustive modularity");
}

// ---------------------------------------------------------------------------
// 5. Temporal boundary at the default 0.8 threshold.
// ---------------------------------------------------------------------------

#[test]
fn acceptance_05_temporal_boundary() {
    let doc = |id: &str, title: &str, year: i32| Publication {
        id: id.into(),
        title: title.into(),
        abstract_text: None,
        authors: vec![],
        venue: None,
        year: Some(year),
        doi: None,
    };
    let index_of = |docs: Vec<Publication>| {
        build_index(
            &Corpus::from_publications(docs).unwrap(),
            &ExtractionConfig {
                min_doc_frequency: 1,
                ..ExtractionConfig::default()
            },
        )
    };

    // {2019: 1, 2020: 4}: ratio exactly 0.8, retained (inclusive threshold).
    let kept = index_of(vec![
        doc("1", "term-q and term-q and term-q and term-q", 2020),
        doc("2", "term-q", 2019),
    ]);
    let retained = latest_terms(&kept, &LatestConfig::default()).unwrap();
    assert_eq!(retained.len(), 1);
    assert_eq!(retained[0].term, "TERM-Q");
    assert_eq!(retained[0].total, 5);
    assert_eq!(retained[0].ratio, 0.8);

    // {2019: 2, 2020: 3}: ratio 0.6, rejected.
    let dropped = index_of(vec![
        doc("1", "term-q and term-q and term-q", 2020),
        doc("2", "term-q and term-q", 2019),
    ]);
    assert!(latest_terms(&dropped, &LatestConfig::default()).unwrap().is_empty());
    pass(5, "recency ratio boundary 4/5 kept, 3/5 rejected");
}

// ---------------------------------------------------------------------------
// 6. Statistics on the 20-row hand-checked fixture.
// ---------------------------------------------------------------------------

#[test]
fn acceptance_06_stats_fixture() {
    let corpus = parse_corpus_from_path(fixture("corpus20.csv"), &Default::default()).unwrap();
    let stats = corpus_stats(&corpus);
    let expected = StatsReport {
        publication_count: 20,
        abstract_count: 12,
        abstract_fraction: 0.6,
        author_count: 19,
        authors_at_least_2: 9,
        authors_at_least_10: 0,
        venue_count: 7,
        venues_at_least_2: 4,
        venues_at_least_10: 0,
        year_count: 7,
        mean_authors_per_publication: 1.7,
    };
    assert!(
        (stats.mean_authors_per_publication - 1.7).abs() < 1e-12,
        "mean {}",
        stats.mean_authors_per_publication
    );
    assert_eq!(stats, expected);
    pass(6, "hand-computed statistics fixture");
}

// ---------------------------------------------------------------------------
// 7. Byte-determinism of the full CLI pipeline.
// ---------------------------------------------------------------------------

fn run_cli(args: &[&str]) {
    let output = Process::new(env!("CARGO_BIN_EXE_pubmine"))
        .args(args)
        .output()
        .expect("binary starts");
    assert!(
        output.status.success(),
        "pubmine {args:?} failed:\n{}",
        String::from_utf8_lossy(&output.stderr)
    );
}

fn full_pipeline(csv: &Path, root: &Path) {
    let ingest = root.join("ingest");
    run_cli(&[
        "ingest",
        "--input",
        csv.to_str().unwrap(),
        "--out",
        ingest.to_str().unwrap(),
    ]);
    let index = ingest.join("index.json");
    run_cli(&[
        "focus",
        "--input",
        index.to_str().unwrap(),
        "--pattern",
        "ORIGIN",
        "--exclusions",
        fixture("exclusions.txt").to_str().unwrap(),
        "--out",
        root.join("focus").to_str().unwrap(),
    ]);
    run_cli(&[
        "latest",
        "--input",
        index.to_str().unwrap(),
        "--out",
        root.join("latest").to_str().unwrap(),
    ]);
}

fn read_tree(root: &Path) -> BTreeMap<String, Vec<u8>> {
    let mut files = BTreeMap::new();
    let mut stack = vec![root.to_path_buf()];
    while let Some(dir) = stack.pop() {
        for entry in std::fs::read_dir(&dir).unwrap() {
            let path = entry.unwrap().path();
            if path.is_dir() {
                stack.push(path);
            } else {
                let rel = path
                    .strip_prefix(root)
                    .unwrap()
                    .to_string_lossy()
                    .into_owned();
                files.insert(rel, std::fs::read(&path).unwrap());
            }
        }
    }
    files
}

#[test]
fn acceptance_07_pipeline_determinism() {
    let workdir = tempfile::tempdir().unwrap();
    let csv = fixture("corpus20.csv");

    let run_a = workdir.path().join("a");
    let run_b = workdir.path().join("b");
    full_pipeline(&csv, &run_a);
    full_pipeline(&csv, &run_b);
    let tree_a = read_tree(&run_a);
    assert!(tree_a.len() >= 7, "pipeline should write several files");
    assert_eq!(tree_a, read_tree(&run_b), "reruns must be byte-identical");

    // Permuting the input rows must not change the index at all.
    let text = std::fs::read_to_string(&csv).unwrap();
    let mut lines: Vec<&str> = text.lines().collect();
    lines[1..].reverse();
    let permuted = workdir.path().join("permuted.csv");
    std::fs::write(&permuted, lines.join("\n") + "\n").unwrap();
    let run_c = workdir.path().join("c");
    run_cli(&[
        "ingest",
        "--input",
        permuted.to_str().unwrap(),
        "--out",
        run_c.to_str().unwrap(),
    ]);
    let original = std::fs::read(run_a.join("ingest/index.json")).unwrap();
    let permuted_index = std::fs::read(run_c.join("index.json")).unwrap();
    assert_eq!(original, permuted_index);
    pass(7, "byte-identical pipeline reruns and row-order independence");
}

// ---------------------------------------------------------------------------
// 8. JSON graph export/import round-trip.
// ---------------------------------------------------------------------------

#[test]
fn acceptance_08_json_round_trip() {
    let mut rng = StdRng::seed_from_u64(0xA8);
    for case in 0..100 {
        let document = if case % 2 == 0 {
            let n = rng.random_range(0..=10);
            let labels: Vec<String> = (0..n).map(|i| format!("TERM-{i}")).collect();
            let mut graph = CooccurrenceGraph::new();
            for label in &labels {
                graph.add_node(label.clone());
            }
            for i in 0..n {
                for j in (i + 1)..n {
                    if rng.random_bool(0.35) {
                        graph.add_edge(labels[i].clone(), labels[j].clone(), rng.random_range(1..=9));
                    }
                }
            }
            GraphDocument::from_cooccurrence(&graph)
        } else {
            let kind = if rng.random_bool(0.5) {
                NodeKind::Publication
            } else {
                NodeKind::Author
            };
            let mut graph = BipartiteGraph::new(kind);
            let lefts = rng.random_range(0..=6);
            let rights = rng.random_range(0..=6);
            for i in 0..lefts {
                graph.add_left(format!("L{i}"));
            }
            for j in 0..rights {
                graph.add_right(format!("R{j}"));
            }
            for i in 0..lefts {
                for j in 0..rights {
                    if rng.random_bool(0.35) {
                        graph.add_edge(format!("L{i}"), format!("R{j}"), rng.random_range(1..=9));
                    }
                }
            }
            GraphDocument::from_bipartite(&graph)
        };

        let json = document.to_json();
        let parsed = GraphDocument::from_json(&json).unwrap();
        assert_eq!(parsed, document, "case {case}");
        assert_eq!(parsed.to_json(), json, "case {case}");
    }
    pass(8, "JSON export/import identity on 100 random graphs");
}

// ---------------------------------------------------------------------------
// 9. Planted-term mini-corpus with known frequencies.
// ---------------------------------------------------------------------------

fn planted_corpus() -> Corpus {
    let mut rng = StdRng::seed_from_u64(0xA9);
    let mut docs = Vec::new();
    for i in 1..=30u32 {
        let mut planted: Vec<&str> = Vec::new();
        if (1..=12).contains(&i) {
            planted.push("bat-origin");
        }
        if (1..=5).contains(&i) {
            planted.push("avian-origin");
        }
        if (13..=16).contains(&i) {
            planted.push("human-origin");
        }
        if (13..=15).contains(&i) {
            planted.push("animal-origin");
        }
        if (20..=22).contains(&i) {
            planted.push("originality");
        }
        if (23..=27).contains(&i) {
            planted.push("anti-malaria");
        }
        if (23..=24).contains(&i) {
            planted.push("anti-flu");
        }
        // Flank every planted term with stopwords so no accidental n-gram
        // forms around or between them.
        let middle = if planted.is_empty() {
            "the routine material".to_string()
        } else {
            planted
                .iter()
                .map(|t| format!("the {t}"))
                .collect::<Vec<_>>()
                .join(" and ")
        };
        docs.push(Publication {
            id: format!("S{i:02}"),
            title: "synthetic record".into(),
            abstract_text: Some(format!("We examined {middle} with sample-{i:02} in mind.")),
            authors: vec![format!("AUTHOR {}", rng.random_range(1..=8))],
            venue: Some("SYNTH J".into()),
            year: Some(rng.random_range(2015..=2020)),
            doi: None,
        });
    }
    Corpus::from_publications(docs).unwrap()
}

#[test]
fn acceptance_09_planted_mini_corpus() {
    let start = Instant::now();
    let corpus = planted_corpus();
    let index = build_index(&corpus, &ExtractionConfig::default());

    let origin = select_topic_terms(&index, "ORIGIN", &BTreeSet::new());
    let listed: Vec<(&str, usize)> = origin
        .terms
        .iter()
        .map(|t| (t.term.as_str(), t.doc_frequency))
        .collect();
    assert_eq!(
        listed,
        vec![
            ("BAT-ORIGIN", 12),
            ("AVIAN-ORIGIN", 5),
            ("HUMAN-ORIGIN", 4),
            ("ANIMAL-ORIGIN", 3),
            ("ORIGINALITY", 3),
        ]
    );

    let anti = select_topic_terms(&index, "ANTI", &BTreeSet::new());
    let listed: Vec<(&str, usize)> = anti
        .terms
        .iter()
        .map(|t| (t.term.as_str(), t.doc_frequency))
        .collect();
    assert_eq!(listed, vec![("ANTI-MALARIA", 5), ("ANTI-FLU", 2)]);

    let trimmed = select_topic_terms(&index, "ORIGIN", &parse_exclusions("originality"));
    let graph = term_publication_graph(&index, &trimmed).unwrap();
    assert_eq!(graph.edge_count(), 24); // 12 + 5 + 4 + 3 incidences

    // Exactly the planted overlaps: S01-S05 (bat+avian), S13-S15
    // (human+animal).
    let expected: Vec<(String, usize)> = ["S01", "S02", "S03", "S04", "S05", "S13", "S14", "S15"]
        .iter()
        .map(|id| (id.to_string(), 2))
        .collect();
    assert_eq!(multi_term_publications(&index, &trimmed, 2), expected);
    assert!(multi_term_publications(&index, &trimmed, 3).is_empty());

    assert!(start.elapsed().as_secs_f64() < 10.0, "took {:?}", start.elapsed());
    pass(9, "planted frequencies and multi-term documents");
}

// ---------------------------------------------------------------------------
// 10. Corpus-shaped smoke check (informative): a generated metadata file in
//     the same shape as the real snapshots must put BAT-ORIGIN on top of the
//     ORIGIN slice and keep well over 500 latest terms at defaults. No exact
//     counts — those drift with the dataset.
// ---------------------------------------------------------------------------

#[test]
fn acceptance_10_corpus_shaped_smoke() {
    let workdir = tempfile::tempdir().unwrap();
    let csv = workdir.path().join("metadata.csv");
    let mut rows = vec!["pubmed_id,title,abstract,authors,journal,publish_time,doi".to_string()];
    for k in 0..520 {
        rows.push(format!(
            "n{k:04}a,Study of node-{k:04} and node-{k:04},,Smith J,Synth J,2020-04-01,"
        ));
        rows.push(format!(
            "n{k:04}b,Survey of node-{k:04} findings,,Doe A,Synth J,2020-05-01,"
        ));
    }
    for i in 0..30 {
        let date = ["2018-01-10", "2019-06-10", "2020-03-10"][i % 3];
        rows.push(format!(
            "bat{i:02},Isolation of bat-origin sample {i:02},,Lee C,Synth J,{date},"
        ));
    }
    for i in 0..7 {
        rows.push(format!(
            "av{i:02},Avian-origin tracking {i:02},,Kim H,Synth J,2019-02-10,"
        ));
    }
    std::fs::write(&csv, rows.join("\n") + "\n").unwrap();

    let ingest = workdir.path().join("ingest");
    run_cli(&[
        "ingest",
        "--input",
        csv.to_str().unwrap(),
        "--out",
        ingest.to_str().unwrap(),
    ]);
    let index = ingest.join("index.json");
    let focus = workdir.path().join("focus");
    run_cli(&[
        "focus",
        "--input",
        index.to_str().unwrap(),
        "--pattern",
        "ORIGIN",
        "--out",
        focus.to_str().unwrap(),
    ]);
    let latest = workdir.path().join("latest");
    run_cli(&[
        "latest",
        "--input",
        index.to_str().unwrap(),
        "--out",
        latest.to_str().unwrap(),
    ]);

    let selection: TopicSelection =
        serde_json::from_str(&std::fs::read_to_string(focus.join("selection.json")).unwrap())
            .unwrap();
    assert_eq!(selection.terms[0].term, "BAT-ORIGIN");
    assert_eq!(selection.terms[0].doc_frequency, 30);

    let retained: Vec<LatestTerm> =
        serde_json::from_str(&std::fs::read_to_string(latest.join("latest_terms.json")).unwrap())
            .unwrap();
    assert!(retained.len() > 500, "retained {}", retained.len());
    pass(10, "corpus-shaped smoke: BAT-ORIGIN on top, >500 latest terms");
}
