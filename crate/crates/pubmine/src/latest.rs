//! Latest-terminology mining: phrases whose recent usage concentrates in the
//! most recent corpus year, their co-occurrence structure, and community
//! drill-down.
//!
//! A phrase qualifies when, inside a trailing window of years, a large-enough
//! share of its occurrences falls in the latest year itself. Occurrences
//! from publications without a date stay out of the ratio — they carry no
//! temporal signal — but such publications still count when two retained
//! terms are checked for co-occurrence.

use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::{
    build_cooccurrence, BipartiteGraph, Community, CooccurrenceGraph, GraphError, NodeKind,
};
use crate::keyphrase::{KeyphraseIndex, YearKey};

/// Settings for the recency filter.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct LatestConfig {
    /// How many years the trailing window covers, latest year included.
    pub window_years: i32,
    /// Anchor year; `None` means the most recent year in the index.
    pub latest_year: Option<i32>,
    /// Minimum share of windowed occurrences that must fall in the latest
    /// year, inclusive, in `(0, 1]`.
    pub ratio_threshold: f64,
    /// Minimum windowed occurrence total; filters out noise terms.
    pub min_total_count: u64,
    /// Count distinct publications per year instead of raw occurrences.
    pub count_documents: bool,
}

impl Default for LatestConfig {
    fn default() -> Self {
        LatestConfig {
            window_years: 30,
            latest_year: None,
            ratio_threshold: 0.8,
            min_total_count: 3,
            count_documents: false,
        }
    }
}

/// A phrase that passed the recency filter.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct LatestTerm {
    pub term: String,
    /// Share of windowed counts in the latest year.
    pub ratio: f64,
    /// Windowed count total.
    pub total: u64,
    /// Windowed counts per year.
    pub by_year: BTreeMap<i32, u64>,
}

#[derive(Debug, Error)]
pub enum LatestError {
    /// No indexed publication has a year, so there is nothing to anchor the
    /// window to.
    #[error("index has no dated publications to anchor the time window")]
    NoYearData,
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// Phrases whose windowed usage concentrates in the latest year, ordered by
/// windowed total descending, then term ascending.
pub fn latest_terms(
    index: &KeyphraseIndex,
    config: &LatestConfig,
) -> Result<Vec<LatestTerm>, LatestError> {
    assert!(config.window_years >= 1, "window must cover at least one year");
    assert!(
        config.ratio_threshold > 0.0 && config.ratio_threshold <= 1.0,
        "ratio threshold must be in (0, 1]"
    );
    assert!(config.min_total_count >= 1, "min_total_count must be at least 1");

    let latest_year = match config.latest_year {
        Some(year) => year,
        None => index.max_document_year().ok_or(LatestError::NoYearData)?,
    };
    let window_start = latest_year - config.window_years + 1;

    let mut retained = Vec::new();
    for (phrase, posting) in &index.entries {
        let by_year = if config.count_documents {
            document_counts(index, &posting.doc_ids, window_start, latest_year)
        } else {
            posting
                .count_by_year
                .iter()
                .filter_map(|(key, count)| match key {
                    YearKey::Year(y) if (window_start..=latest_year).contains(y) => {
                        Some((*y, *count))
                    }
                    _ => None,
                })
                .collect::<BTreeMap<i32, u64>>()
        };
        let total: u64 = by_year.values().sum();
        if total < config.min_total_count {
            continue;
        }
        let latest_count = by_year.get(&latest_year).copied().unwrap_or(0);
        let ratio = latest_count as f64 / total as f64;
        if ratio >= config.ratio_threshold {
            retained.push(LatestTerm {
                term: phrase.clone(),
                ratio,
                total,
                by_year,
            });
        }
    }
    retained.sort_by(|a, b| b.total.cmp(&a.total).then_with(|| a.term.cmp(&b.term)));
    Ok(retained)
}

fn document_counts(
    index: &KeyphraseIndex,
    doc_ids: &BTreeSet<String>,
    window_start: i32,
    latest_year: i32,
) -> BTreeMap<i32, u64> {
    let mut by_year = BTreeMap::new();
    for doc in doc_ids {
        let year = index.documents.get(doc).and_then(|d| d.year);
        if let Some(y) = year {
            if (window_start..=latest_year).contains(&y) {
                *by_year.entry(y).or_insert(0) += 1;
            }
        }
    }
    by_year
}

/// Co-occurrence graph over the retained terms, keeping edges of weight at
/// least `min_edge_weight`. Isolated terms stay as nodes.
pub fn latest_topic_graph(
    index: &KeyphraseIndex,
    config: &LatestConfig,
    min_edge_weight: u64,
) -> Result<CooccurrenceGraph, LatestError> {
    let terms: BTreeSet<String> = latest_terms(index, config)?
        .into_iter()
        .map(|t| t.term)
        .collect();
    let mut graph = build_cooccurrence(index, &terms)?;
    graph.retain_min_weight(min_edge_weight);
    Ok(graph)
}

/// Links every term of one community to the publications containing it
/// (weight 1 per incidence) — the drill-down view for a detected community.
pub fn community_publication_graph(
    index: &KeyphraseIndex,
    community: &Community,
) -> Result<BipartiteGraph, LatestError> {
    let mut graph = BipartiteGraph::new(NodeKind::Publication);
    for term in &community.members {
        let posting = index
            .get(term)
            .ok_or_else(|| GraphError::UnknownTerm(term.clone()))?;
        graph.add_left(term.clone());
        for doc in &posting.doc_ids {
            graph.add_edge(term.clone(), doc.clone(), 1);
        }
    }
    Ok(graph)
}
