//! Graph models for mined corpora: bipartite term graphs, term co-occurrence
//! graphs, community detection, and serialization.
//!
//! All node sets and edge maps are ordered, so iteration — and therefore
//! every export — is deterministic for a given graph value.

mod community;
mod export;

pub use community::{detect_communities, modularity, Community};
pub use export::{ExportFormat, GraphDocument, GraphEdge, GraphNode, NodeKind};

use std::collections::{BTreeMap, BTreeSet};

use thiserror::Error;

use crate::keyphrase::KeyphraseIndex;

#[derive(Debug, Error)]
pub enum GraphError {
    /// A requested term is not present in the index or graph.
    #[error("unknown term \"{0}\"")]
    UnknownTerm(String),
    /// A graph document failed structural validation.
    #[error("invalid graph document: {0}")]
    InvalidDocument(String),
    #[error("failed to parse graph JSON: {0}")]
    Json(#[from] serde_json::Error),
}

/// An undirected bipartite graph between term nodes (left side) and
/// publication or author nodes (right side).
///
/// Bipartiteness holds by construction: edges can only be added between a
/// left and a right label, and weights are always at least 1.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BipartiteGraph {
    right_kind: NodeKind,
    left: BTreeSet<String>,
    right: BTreeSet<String>,
    edges: BTreeMap<(String, String), u64>,
}

impl BipartiteGraph {
    /// Creates an empty graph whose right side holds nodes of `right_kind`.
    /// Panics if `right_kind` is [`NodeKind::Term`]; the left side owns terms.
    pub fn new(right_kind: NodeKind) -> Self {
        assert!(
            right_kind != NodeKind::Term,
            "right side must be publications or authors"
        );
        BipartiteGraph {
            right_kind,
            left: BTreeSet::new(),
            right: BTreeSet::new(),
            edges: BTreeMap::new(),
        }
    }

    pub fn right_kind(&self) -> NodeKind {
        self.right_kind
    }

    pub fn add_left(&mut self, label: impl Into<String>) {
        self.left.insert(label.into());
    }

    pub fn add_right(&mut self, label: impl Into<String>) {
        self.right.insert(label.into());
    }

    /// Adds `weight` to the edge between a left and a right node, inserting
    /// the endpoints if needed. Panics on a zero weight.
    pub fn add_edge(&mut self, left: impl Into<String>, right: impl Into<String>, weight: u64) {
        assert!(weight >= 1, "edge weights must be positive");
        let left = left.into();
        let right = right.into();
        self.left.insert(left.clone());
        self.right.insert(right.clone());
        *self.edges.entry((left, right)).or_insert(0) += weight;
    }

    pub fn left(&self) -> impl Iterator<Item = &str> {
        self.left.iter().map(String::as_str)
    }

    pub fn right(&self) -> impl Iterator<Item = &str> {
        self.right.iter().map(String::as_str)
    }

    pub fn edges(&self) -> impl Iterator<Item = (&str, &str, u64)> {
        self.edges.iter().map(|((l, r), w)| (l.as_str(), r.as_str(), *w))
    }

    pub fn weight(&self, left: &str, right: &str) -> Option<u64> {
        self.edges.get(&(left.to_string(), right.to_string())).copied()
    }

    pub fn left_count(&self) -> usize {
        self.left.len()
    }

    pub fn right_count(&self) -> usize {
        self.right.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn export(&self, format: ExportFormat) -> String {
        GraphDocument::from_bipartite(self).render(format)
    }
}

/// An undirected weighted graph over term nodes, without self-loops.
///
/// Edges are stored once per unordered pair, with endpoints in ascending
/// label order.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct CooccurrenceGraph {
    nodes: BTreeSet<String>,
    edges: BTreeMap<(String, String), u64>,
}

impl CooccurrenceGraph {
    pub fn new() -> Self {
        CooccurrenceGraph::default()
    }

    pub fn add_node(&mut self, label: impl Into<String>) {
        self.nodes.insert(label.into());
    }

    /// Adds `weight` to the edge between two distinct nodes, inserting them
    /// if needed. Panics on self-loops and zero weights.
    pub fn add_edge(&mut self, a: impl Into<String>, b: impl Into<String>, weight: u64) {
        assert!(weight >= 1, "edge weights must be positive");
        let a = a.into();
        let b = b.into();
        assert!(a != b, "self-loops are not allowed");
        self.nodes.insert(a.clone());
        self.nodes.insert(b.clone());
        let key = if a < b { (a, b) } else { (b, a) };
        *self.edges.entry(key).or_insert(0) += weight;
    }

    pub fn nodes(&self) -> impl Iterator<Item = &str> {
        self.nodes.iter().map(String::as_str)
    }

    pub fn contains_node(&self, label: &str) -> bool {
        self.nodes.contains(label)
    }

    /// Edges as `(a, b, weight)` with `a < b`, ascending.
    pub fn edges(&self) -> impl Iterator<Item = (&str, &str, u64)> {
        self.edges.iter().map(|((a, b), w)| (a.as_str(), b.as_str(), *w))
    }

    pub fn weight(&self, a: &str, b: &str) -> Option<u64> {
        let (a, b) = if a < b { (a, b) } else { (b, a) };
        self.edges.get(&(a.to_string(), b.to_string())).copied()
    }

    pub fn node_count(&self) -> usize {
        self.nodes.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Drops edges lighter than `min_weight`, keeping all nodes.
    pub fn retain_min_weight(&mut self, min_weight: u64) {
        self.edges.retain(|_, w| *w >= min_weight);
    }

    pub fn export(&self, format: ExportFormat) -> String {
        GraphDocument::from_cooccurrence(self).render(format)
    }
}

/// Builds the co-occurrence graph over `terms`: an edge joins two terms with
/// weight equal to the number of publications containing both, and pairs
/// sharing no publication get no edge.
///
/// Every term must exist in the index; all terms become nodes even when
/// isolated.
pub fn build_cooccurrence(
    index: &KeyphraseIndex,
    terms: &BTreeSet<String>,
) -> Result<CooccurrenceGraph, GraphError> {
    let mut postings = Vec::with_capacity(terms.len());
    for term in terms {
        let posting = index
            .get(term)
            .ok_or_else(|| GraphError::UnknownTerm(term.clone()))?;
        postings.push((term.as_str(), &posting.doc_ids));
    }

    let mut graph = CooccurrenceGraph::new();
    for (term, _) in &postings {
        graph.add_node(*term);
    }
    for i in 0..postings.len() {
        for j in (i + 1)..postings.len() {
            let (a, docs_a) = &postings[i];
            let (b, docs_b) = &postings[j];
            let shared = docs_a.intersection(docs_b).count() as u64;
            if shared > 0 {
                graph.add_edge(*a, *b, shared);
            }
        }
    }
    Ok(graph)
}
