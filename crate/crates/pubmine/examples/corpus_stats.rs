//! Corpus statistics from publication metadata.
//!
//! Parses a small embedded metadata CSV, prints the summary report, and
//! ranks the most frequent authors, venues, and years.
//!
//! # Run
//!
//! ```bash
//! cargo run --example corpus_stats
//! ```

use pubmine::{corpus_stats, parse_corpus, top_entities, CsvConfig, EntityField};

const METADATA_CSV: &str = "\
pubmed_id,title,abstract,authors,journal,publish_time,doi
101,Bat-origin coronaviruses and spillover risk,We review bat-origin coronaviruses and their spillover drivers.,Shi Z; Daszak P,Nat Rev Microbiol,2019-05-10,10.1000/nrm.101
102,Spike protein binding of a bat-origin virus,The spike protein binds the receptor with high affinity.,Li F; Shi Z,J Virol,2020-03-02,10.1000/jv.102
103,Aerosol and droplet transmission indoors,Aerosol and droplet transmission dominates poorly ventilated rooms.,Morawska L,Lancet,2021-04-21,10.1000/l.103
104,Droplet dispersion in hospital wards,We model droplet dispersion and aerosol persistence in wards.,Tang J; Morawska L,BMJ,2021-02-14,10.1000/bmj.104
105,Anti-viral screening against the spike protein,An anti-viral panel blocks spike protein cleavage.,Li F; Wang C,J Virol,2021-06-30,10.1000/jv.105
106,Ventilation standards for aerosol control,Ventilation and filtration cut indoor aerosol load.,Morawska L; Tang J,Lancet,2021-01-08,10.1000/l.106
107,Immune evasion by emerging variants,Variants combine immune evasion with altered spike protein epitopes.,Wang C,Cell,2021-07-19,10.1000/c.107
108,A survey of zoonotic spillover events,,Daszak P,Science,05 Nov 2018,
109,Untitled archive note,,,,,
";

fn main() -> Result<(), Box<dyn std::error::Error>> {
    println!("=== Corpus Statistics ===\n");

    let corpus = parse_corpus(METADATA_CSV.as_bytes(), &CsvConfig::default())?;
    let stats = corpus_stats(&corpus);

    println!("Publications:        {}", stats.publication_count);
    println!(
        "With abstracts:      {} ({:.0}%)",
        stats.abstract_count,
        stats.abstract_fraction * 100.0
    );
    println!("Distinct authors:    {}", stats.author_count);
    println!("Distinct venues:     {}", stats.venue_count);
    println!("Distinct years:      {}", stats.year_count);
    println!(
        "Authors per paper:   {:.2} (mean)",
        stats.mean_authors_per_publication
    );

    println!("\nAuthors on at least 2 publications");
    println!("----------------------------------");
    for (author, count) in top_entities(&corpus, EntityField::Author, 2) {
        println!("  {count} × {author}");
    }

    println!("\nVenues with at least 2 publications");
    println!("-----------------------------------");
    for (venue, count) in top_entities(&corpus, EntityField::Venue, 2) {
        println!("  {count} × {venue}");
    }

    println!("\nPublications per year");
    println!("---------------------");
    for (year, count) in top_entities(&corpus, EntityField::Year, 1) {
        println!("  {year}: {count}");
    }

    // Dates come in several shapes ("2019-05-10", "05 Nov 2018"); only the
    // year is kept. Undated rows count toward no year at all.
    let undated = corpus
        .publications()
        .iter()
        .filter(|p| p.year.is_none())
        .count();
    println!("\nUndated publications: {undated}");
    Ok(())
}
