//! Topic slicing: select indexed phrases around a pattern and materialize
//! the bipartite graphs that show where the topic lives.
//!
//! Selection is substring containment on normalized (uppercase) phrases, so
//! a pattern like `ORIGIN` pulls in `BAT-ORIGIN`, `ANIMAL-ORIGIN`, … and
//! also accidental matches like `ORIGINALITY` — that is what the exclusion
//! list is for.

use std::collections::{BTreeMap, BTreeSet};
use std::path::Path;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::corpus::Corpus;
use crate::graph::{BipartiteGraph, NodeKind};
use crate::keyphrase::KeyphraseIndex;

/// One matched phrase and the number of publications containing it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SelectedTerm {
    pub term: String,
    pub doc_frequency: usize,
}

/// The outcome of [`select_topic_terms`]: matched terms ordered by document
/// frequency descending, then label ascending.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TopicSelection {
    pub pattern: String,
    pub terms: Vec<SelectedTerm>,
}

impl TopicSelection {
    pub fn term_labels(&self) -> impl Iterator<Item = &str> {
        self.terms.iter().map(|t| t.term.as_str())
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }
}

#[derive(Debug, Error)]
pub enum FocusError {
    /// The selection matched nothing, so there is no graph to build.
    #[error("no indexed phrase matches pattern \"{0}\"")]
    EmptySelection(String),
}

/// Selects every indexed phrase containing `pattern` (case-insensitive) that
/// is not excluded.
pub fn select_topic_terms(
    index: &KeyphraseIndex,
    pattern: &str,
    exclusions: &BTreeSet<String>,
) -> TopicSelection {
    let needle = pattern.to_uppercase();
    let mut terms: Vec<SelectedTerm> = index
        .entries
        .iter()
        .filter(|(phrase, _)| phrase.contains(&needle) && !exclusions.contains(*phrase))
        .map(|(phrase, posting)| SelectedTerm {
            term: phrase.clone(),
            doc_frequency: posting.doc_ids.len(),
        })
        .collect();
    terms.sort_by(|a, b| {
        b.doc_frequency
            .cmp(&a.doc_frequency)
            .then_with(|| a.term.cmp(&b.term))
    });
    TopicSelection {
        pattern: pattern.to_string(),
        terms,
    }
}

/// Parses an exclusion list: one phrase per line, trimmed, uppercased, blank
/// lines skipped.
pub fn parse_exclusions(text: &str) -> BTreeSet<String> {
    text.lines()
        .map(|line| line.trim().to_uppercase())
        .filter(|line| !line.is_empty())
        .collect()
}

/// Reads an exclusion list file; see [`parse_exclusions`].
pub fn load_exclusions<P: AsRef<Path>>(path: P) -> std::io::Result<BTreeSet<String>> {
    Ok(parse_exclusions(&std::fs::read_to_string(path)?))
}

/// Links each selected term to the publications containing it (weight 1 per
/// incidence).
pub fn term_publication_graph(
    index: &KeyphraseIndex,
    selection: &TopicSelection,
) -> Result<BipartiteGraph, FocusError> {
    if selection.is_empty() {
        return Err(FocusError::EmptySelection(selection.pattern.clone()));
    }
    let mut graph = BipartiteGraph::new(NodeKind::Publication);
    for term in selection.term_labels() {
        graph.add_left(term);
        if let Some(posting) = index.get(term) {
            for doc in &posting.doc_ids {
                graph.add_edge(term, doc.clone(), 1);
            }
        }
    }
    Ok(graph)
}

/// Links each selected term to the authors of the publications containing
/// it; the weight on `(term, author)` counts that author's publications
/// containing the term.
///
/// Author lists come from `corpus`; publications the corpus does not know
/// contribute nothing.
pub fn term_author_graph(
    corpus: &Corpus,
    index: &KeyphraseIndex,
    selection: &TopicSelection,
) -> Result<BipartiteGraph, FocusError> {
    let authors_of: BTreeMap<&str, Vec<&str>> = corpus
        .publications()
        .iter()
        .map(|p| (p.id.as_str(), p.authors.iter().map(String::as_str).collect()))
        .collect();
    author_graph_from(index, selection, |doc| {
        authors_of.get(doc).cloned().unwrap_or_default()
    })
}

/// Same as [`term_author_graph`], but takes author lists from the metadata
/// stored in the index itself — enough when only a saved index file is at
/// hand.
pub fn term_author_graph_from_index(
    index: &KeyphraseIndex,
    selection: &TopicSelection,
) -> Result<BipartiteGraph, FocusError> {
    author_graph_from(index, selection, |doc| {
        index
            .documents
            .get(doc)
            .map(|d| d.authors.iter().map(String::as_str).collect())
            .unwrap_or_default()
    })
}

fn author_graph_from<'a>(
    index: &KeyphraseIndex,
    selection: &TopicSelection,
    authors_of: impl Fn(&str) -> Vec<&'a str>,
) -> Result<BipartiteGraph, FocusError> {
    if selection.is_empty() {
        return Err(FocusError::EmptySelection(selection.pattern.clone()));
    }
    let mut graph = BipartiteGraph::new(NodeKind::Author);
    for term in selection.term_labels() {
        graph.add_left(term);
        let Some(posting) = index.get(term) else { continue };
        for doc in &posting.doc_ids {
            // An author listed twice on one publication still counts it once.
            let distinct: BTreeSet<&str> = authors_of(doc).into_iter().collect();
            for author in distinct {
                graph.add_edge(term, author, 1);
            }
        }
    }
    Ok(graph)
}

/// Publications containing at least `k` distinct selected terms, ordered by
/// matched-term count descending, then id ascending.
pub fn multi_term_publications(
    index: &KeyphraseIndex,
    selection: &TopicSelection,
    k: usize,
) -> Vec<(String, usize)> {
    assert!(k >= 1, "k must be at least 1");
    let mut counts: BTreeMap<&str, usize> = BTreeMap::new();
    for term in selection.term_labels() {
        if let Some(posting) = index.get(term) {
            for doc in &posting.doc_ids {
                *counts.entry(doc).or_insert(0) += 1;
            }
        }
    }
    let mut hits: Vec<(String, usize)> = counts
        .into_iter()
        .filter(|(_, c)| *c >= k)
        .map(|(doc, c)| (doc.to_string(), c))
        .collect();
    hits.sort_by(|a, b| b.1.cmp(&a.1).then_with(|| a.0.cmp(&b.0)));
    hits
}
