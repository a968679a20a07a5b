//! Topic selection and bipartite topic graphs.
//!
//! Selects every indexed phrase containing a pattern, trims accidental
//! matches with an exclusion list, and materializes term↔publication and
//! term↔author graphs for the slice. Also lists publications that combine
//! several of the selected terms.
//!
//! # Run
//!
//! ```bash
//! cargo run --example topic_focus
//! ```

use pubmine::topic_focus::{parse_exclusions, term_author_graph_from_index};
use pubmine::{
    build_index, multi_term_publications, parse_corpus, select_topic_terms,
    term_publication_graph, CsvConfig, ExportFormat, ExtractionConfig,
};

const METADATA_CSV: &str = "\
pubmed_id,title,abstract,authors,journal,publish_time,doi
301,Bat-origin coronaviruses in southern caves,Field work confirms bat-origin coronaviruses circulate widely.,Shi Z; Daszak P,Emerg Infect Dis,2019-04-02,
302,Animal-origin influenza at live markets,Surveillance finds animal-origin influenza in market poultry.,Peiris M,Lancet,2020-01-15,
303,Tracing the animal-origin of an outbreak,Genomes trace the animal-origin of the outbreak and its later human-origin spread.,Koopmans M; Peiris M,Science,2021-02-08,
304,Human-origin strains in returning travelers,Human-origin strains spread along travel corridors.,Wilson M,J Travel Med,2020-09-23,
305,Originality metrics for grant review,We propose originality metrics for grant review panels.,Lee B,Res Policy,2020-07-07,
306,Bat-origin virus receptor usage,Receptor assays show broad usage by this bat-origin virus.,Shi Z; Li F,J Virol,2021-05-19,
307,Human-origin strains at the community interface,Human-origin strains persist at the community interface.,Wilson M; Lee B,J Travel Med,2021-08-11,
308,Measuring originality in peer review,Panels disagree when measuring originality of proposals.,Lee B,Res Policy,2019-10-28,
";

fn main() -> Result<(), Box<dyn std::error::Error>> {
    println!("=== Topic Focus ===\n");

    let corpus = parse_corpus(METADATA_CSV.as_bytes(), &CsvConfig::default())?;
    let index = build_index(&corpus, &ExtractionConfig::default());

    // Every indexed phrase containing the (case-insensitive) pattern.
    let all = select_topic_terms(&index, "origin", &Default::default());
    println!("Phrases matching \"origin\"");
    println!("-------------------------");
    for term in &all.terms {
        println!("  {:15} in {} publications", term.term, term.doc_frequency);
    }

    // ORIGINALITY matches the substring but is a different topic; an
    // exclusion list trims such accidental hits.
    let exclusions = parse_exclusions("originality\n");
    let selection = select_topic_terms(&index, "origin", &exclusions);
    println!("\nAfter excluding \"originality\": {} phrases remain", selection.terms.len());

    println!("\nTerm <-> publication graph (DOT)");
    println!("--------------------------------");
    let term_pub = term_publication_graph(&index, &selection)?;
    print!("{}", term_pub.export(ExportFormat::Dot));

    println!("\nTerm <-> author graph");
    println!("---------------------");
    let term_author = term_author_graph_from_index(&index, &selection)?;
    for (term, author, weight) in term_author.edges() {
        println!("  {term} -- {author} (weight {weight})");
    }

    println!("\nPublications combining at least 2 selected terms");
    println!("------------------------------------------------");
    for (id, distinct) in multi_term_publications(&index, &selection, 2) {
        println!("  publication {id} uses {distinct} of the selected terms");
    }
    Ok(())
}
