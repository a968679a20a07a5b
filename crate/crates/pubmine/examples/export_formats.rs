//! Graph serialization: DOT, GraphML, and round-tripping JSON.
//!
//! Builds a small term↔author graph and a co-occurrence graph by hand,
//! renders each format, and shows that the JSON document parses back into
//! an equal value.
//!
//! # Run
//!
//! ```bash
//! cargo run --example export_formats
//! ```

use pubmine::{BipartiteGraph, CooccurrenceGraph, ExportFormat, GraphDocument, NodeKind};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    println!("=== Graph Export Formats ===\n");

    let mut authors = BipartiteGraph::new(NodeKind::Author);
    authors.add_edge("GENE-EDITING", "DOUDNA J", 3);
    authors.add_edge("GENE-EDITING", "ZHANG F", 2);
    authors.add_edge("BASE-EDITING", "LIU D", 2);
    authors.add_edge("BASE-EDITING", "DOUDNA J", 1);

    println!("DOT (Graphviz)");
    println!("--------------");
    print!("{}", authors.export(ExportFormat::Dot));

    println!("\nGraphML");
    println!("-------");
    print!("{}", authors.export(ExportFormat::GraphMl));

    let mut cooc = CooccurrenceGraph::new();
    cooc.add_edge("GENE-EDITING", "CRISPR", 4);
    cooc.add_edge("BASE-EDITING", "CRISPR", 2);
    cooc.add_edge("GENE-EDITING", "BASE-EDITING", 1);

    println!("\nJSON document");
    println!("-------------");
    let json = cooc.export(ExportFormat::Json);
    print!("{json}");

    // The JSON form is the interchange format: it parses back into an equal
    // document, and term-only documents convert into co-occurrence graphs.
    let document = GraphDocument::from_json(&json)?;
    println!("\nparsed nodes: {}, edges: {}", document.nodes.len(), document.edges.len());
    println!("re-rendered JSON identical: {}", document.to_json() == json);

    let rebuilt = document.into_cooccurrence()?;
    println!(
        "rebuilt graph matches: {}",
        rebuilt.node_count() == cooc.node_count() && rebuilt.edge_count() == cooc.edge_count()
    );

    // Every rendering is sorted internally, so the bytes never depend on
    // insertion order.
    let mut reordered = CooccurrenceGraph::new();
    reordered.add_edge("GENE-EDITING", "BASE-EDITING", 1);
    reordered.add_edge("BASE-EDITING", "CRISPR", 2);
    reordered.add_edge("GENE-EDITING", "CRISPR", 4);
    println!(
        "insertion order irrelevant: {}",
        reordered.export(ExportFormat::Json) == json
    );
    Ok(())
}
