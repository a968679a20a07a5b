//! Graph serialization: DOT, GraphML, and a JSON document that round-trips.
//!
//! Every format renders from the same [`GraphDocument`] flattening — nodes in
//! ascending label order, edges in ascending `(src, dst)` order — so a given
//! graph value always produces identical bytes, whatever it was built from.

use std::collections::BTreeSet;
use std::fmt::Write;

use serde::{Deserialize, Serialize};

use super::{BipartiteGraph, CooccurrenceGraph, GraphError};

/// What a node stands for. Serialized lowercase in every format.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum NodeKind {
    Term,
    Publication,
    Author,
}

impl NodeKind {
    fn as_str(self) -> &'static str {
        match self {
            NodeKind::Term => "term",
            NodeKind::Publication => "publication",
            NodeKind::Author => "author",
        }
    }
}

/// Output format for graph serialization.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ExportFormat {
    Dot,
    GraphMl,
    Json,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphNode {
    pub label: String,
    pub kind: NodeKind,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphEdge {
    pub src: String,
    pub dst: String,
    pub weight: u64,
}

/// Flat, format-independent picture of an undirected graph.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphDocument {
    pub nodes: Vec<GraphNode>,
    pub edges: Vec<GraphEdge>,
}

impl GraphDocument {
    pub fn from_bipartite(graph: &BipartiteGraph) -> Self {
        let mut nodes: Vec<GraphNode> = graph
            .left()
            .map(|l| GraphNode { label: l.to_string(), kind: NodeKind::Term })
            .chain(graph.right().map(|r| GraphNode {
                label: r.to_string(),
                kind: graph.right_kind(),
            }))
            .collect();
        nodes.sort_by(|a, b| a.label.cmp(&b.label).then(a.kind.cmp(&b.kind)));
        let edges = graph
            .edges()
            .map(|(l, r, w)| GraphEdge { src: l.to_string(), dst: r.to_string(), weight: w })
            .collect();
        GraphDocument { nodes, edges }
    }

    pub fn from_cooccurrence(graph: &CooccurrenceGraph) -> Self {
        let nodes = graph
            .nodes()
            .map(|n| GraphNode { label: n.to_string(), kind: NodeKind::Term })
            .collect();
        let edges = graph
            .edges()
            .map(|(a, b, w)| GraphEdge { src: a.to_string(), dst: b.to_string(), weight: w })
            .collect();
        GraphDocument { nodes, edges }
    }

    pub fn render(&self, format: ExportFormat) -> String {
        match format {
            ExportFormat::Dot => self.to_dot(),
            ExportFormat::GraphMl => self.to_graphml(),
            ExportFormat::Json => self.to_json(),
        }
    }

    /// Graphviz DOT: one node statement per node with a `kind` attribute,
    /// one `--` edge statement per edge with a `weight` attribute.
    pub fn to_dot(&self) -> String {
        let mut out = String::from("graph {\n");
        for node in &self.nodes {
            writeln!(
                out,
                "  \"{}\" [kind=\"{}\"];",
                dot_escape(&node.label),
                node.kind.as_str()
            )
            .unwrap();
        }
        for edge in &self.edges {
            writeln!(
                out,
                "  \"{}\" -- \"{}\" [weight={}];",
                dot_escape(&edge.src),
                dot_escape(&edge.dst),
                edge.weight
            )
            .unwrap();
        }
        out.push_str("}\n");
        out
    }

    /// GraphML 1.0 with declared attribute keys: `kind` (string, node) and
    /// `weight` (long, edge); edges are undirected.
    pub fn to_graphml(&self) -> String {
        let mut out = String::from(
            "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n\
             <graphml xmlns=\"http://graphml.graphdrawing.org/xmlns\">\n\
             \x20 <key id=\"kind\" for=\"node\" attr.name=\"kind\" attr.type=\"string\"/>\n\
             \x20 <key id=\"weight\" for=\"edge\" attr.name=\"weight\" attr.type=\"long\"/>\n\
             \x20 <graph id=\"G\" edgedefault=\"undirected\">\n",
        );
        for node in &self.nodes {
            writeln!(
                out,
                "    <node id=\"{}\"><data key=\"kind\">{}</data></node>",
                xml_escape(&node.label),
                node.kind.as_str()
            )
            .unwrap();
        }
        for edge in &self.edges {
            writeln!(
                out,
                "    <edge source=\"{}\" target=\"{}\"><data key=\"weight\">{}</data></edge>",
                xml_escape(&edge.src),
                xml_escape(&edge.dst),
                edge.weight
            )
            .unwrap();
        }
        out.push_str("  </graph>\n</graphml>\n");
        out
    }

    /// Pretty JSON with a trailing newline; `from_json` reads it back.
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("graph document serializes");
        s.push('\n');
        s
    }

    /// Parses and validates a JSON graph document: labels must be unique,
    /// edge endpoints must name declared nodes, and weights must be positive.
    pub fn from_json(json: &str) -> Result<Self, GraphError> {
        let doc: GraphDocument = serde_json::from_str(json)?;
        let mut labels = BTreeSet::new();
        for node in &doc.nodes {
            if !labels.insert(node.label.as_str()) {
                return Err(GraphError::InvalidDocument(format!(
                    "duplicate node label {:?}",
                    node.label
                )));
            }
        }
        for edge in &doc.edges {
            for end in [&edge.src, &edge.dst] {
                if !labels.contains(end.as_str()) {
                    return Err(GraphError::InvalidDocument(format!(
                        "edge endpoint {end:?} is not a declared node"
                    )));
                }
            }
            if edge.weight == 0 {
                return Err(GraphError::InvalidDocument(format!(
                    "edge {:?} -- {:?} has zero weight",
                    edge.src, edge.dst
                )));
            }
        }
        Ok(doc)
    }

    /// Rebuilds a bipartite graph: term nodes on the left, the one non-term
    /// kind on the right, edges strictly between the sides.
    pub fn into_bipartite(self) -> Result<BipartiteGraph, GraphError> {
        let right_kinds: BTreeSet<NodeKind> = self
            .nodes
            .iter()
            .map(|n| n.kind)
            .filter(|k| *k != NodeKind::Term)
            .collect();
        let right_kind = match right_kinds.len() {
            0 => NodeKind::Publication, // no right nodes yet; empty side
            1 => *right_kinds.iter().next().unwrap(),
            _ => {
                return Err(GraphError::InvalidDocument(
                    "mixed publication and author nodes".into(),
                ))
            }
        };
        let mut graph = BipartiteGraph::new(right_kind);
        let mut side = std::collections::BTreeMap::new();
        for node in self.nodes {
            if node.kind == NodeKind::Term {
                graph.add_left(node.label.clone());
            } else {
                graph.add_right(node.label.clone());
            }
            side.insert(node.label, node.kind);
        }
        for edge in self.edges {
            let (src_kind, dst_kind) = (side[&edge.src], side[&edge.dst]);
            let (left, right) = match (src_kind == NodeKind::Term, dst_kind == NodeKind::Term) {
                (true, false) => (edge.src, edge.dst),
                (false, true) => (edge.dst, edge.src),
                _ => {
                    return Err(GraphError::InvalidDocument(format!(
                        "edge {:?} -- {:?} does not join a term to a {}",
                        edge.src,
                        edge.dst,
                        right_kind.as_str()
                    )))
                }
            };
            graph.add_edge(left, right, edge.weight);
        }
        Ok(graph)
    }

    /// Rebuilds a co-occurrence graph: all nodes must be terms, no self-loops,
    /// and no pair may appear twice.
    pub fn into_cooccurrence(self) -> Result<CooccurrenceGraph, GraphError> {
        let mut graph = CooccurrenceGraph::new();
        for node in self.nodes {
            if node.kind != NodeKind::Term {
                return Err(GraphError::InvalidDocument(format!(
                    "co-occurrence node {:?} has kind {}",
                    node.label,
                    node.kind.as_str()
                )));
            }
            graph.add_node(node.label);
        }
        for edge in self.edges {
            if edge.src == edge.dst {
                return Err(GraphError::InvalidDocument(format!(
                    "self-loop on {:?}",
                    edge.src
                )));
            }
            if graph.weight(&edge.src, &edge.dst).is_some() {
                return Err(GraphError::InvalidDocument(format!(
                    "duplicate edge {:?} -- {:?}",
                    edge.src, edge.dst
                )));
            }
            graph.add_edge(edge.src, edge.dst, edge.weight);
        }
        Ok(graph)
    }
}

fn dot_escape(s: &str) -> String {
    s.replace('\\', "\\\\").replace('"', "\\\"")
}

fn xml_escape(s: &str) -> String {
    s.replace('&', "&amp;")
        .replace('<', "&lt;")
        .replace('>', "&gt;")
        .replace('"', "&quot;")
        .replace('\'', "&apos;")
}
