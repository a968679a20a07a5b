//! Term communities in the latest-terminology graph.
//!
//! Runs the whole pipeline: index an embedded corpus, keep the phrases
//! concentrated in the most recent year, connect phrases that share
//! publications, partition the graph into communities, and drill back down
//! to the publications behind one community.
//!
//! # Run
//!
//! ```bash
//! cargo run --example communities
//! ```

use pubmine::latest::latest_topic_graph;
use pubmine::{
    build_index, community_publication_graph, detect_communities, latest_terms, modularity,
    parse_corpus, CsvConfig, ExtractionConfig, LatestConfig,
};

const METADATA_CSV: &str = "\
pubmed_id,title,abstract,authors,journal,publish_time,doi
501,Spike protein receptor binding,The spike protein engages its receptor tightly.,Li F,J Virol,2021-01-19,
502,Receptor affinity of the spike protein,Affinity maturation shapes spike protein and receptor contact.,Wang C,Cell,2021-04-03,
503,Structures of the spike protein,Structures show the receptor and the spike protein interface.,Zhou P,Nature,2021-06-27,
504,Aerosol transport and ventilation,Ventilation changes aerosol transport in shared rooms.,Morawska L,Indoor Air,2021-02-05,
505,Droplet and aerosol behavior indoors,Droplet settling competes with aerosol mixing under weak ventilation.,Tang J,BMJ,2021-05-30,
506,Ventilation design against droplet spread,Better ventilation lowers droplet and aerosol exposure.,Morawska L,Lancet,2021-09-16,
507,Aerosol capture of spike protein complexes,Captured aerosol particles carry spike protein fragments.,Li F; Tang J,Science,2021-11-02,
";

fn main() -> Result<(), Box<dyn std::error::Error>> {
    println!("=== Term Communities ===\n");

    let corpus = parse_corpus(METADATA_CSV.as_bytes(), &CsvConfig::default())?;
    let index = build_index(&corpus, &ExtractionConfig::default());
    let config = LatestConfig::default();

    let terms = latest_terms(&index, &config)?;
    println!("Latest terms ({}):", terms.len());
    for t in &terms {
        println!("  {:14} {} occurrences", t.term, t.total);
    }

    // Edge weight = number of publications where both phrases appear.
    let graph = latest_topic_graph(&index, &config, 1)?;
    println!("\nCo-occurrence graph: {} nodes, {} edges", graph.node_count(), graph.edge_count());
    for (a, b, weight) in graph.edges() {
        println!("  {a} -- {b} (shared publications: {weight})");
    }

    let communities = detect_communities(&graph);
    println!("\nDetected {} communities", communities.len());
    for community in &communities {
        let members: Vec<&str> = community.members.iter().map(String::as_str).collect();
        println!("  community {}: {}", community.id, members.join(", "));
    }
    println!("Modularity: {:.3}", modularity(&graph, &communities));

    // Publication 507 bridges the two vocabularies, yet the split survives
    // because the within-theme ties are heavier.
    println!("\nDrill-down into community 0");
    println!("---------------------------");
    let drill = community_publication_graph(&index, &communities[0])?;
    for (term, publication, _) in drill.edges() {
        println!("  {term} appears in publication {publication}");
    }
    Ok(())
}
