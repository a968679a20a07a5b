//! The latest-terminology filter.
//!
//! Keeps indexed phrases whose recent occurrences are concentrated in the
//! corpus's most recent year. Shows which phrases pass, why others are
//! rejected, and how the knobs (ratio threshold, counting mode) change the
//! outcome.
//!
//! # Run
//!
//! ```bash
//! cargo run --example latest_terms
//! ```

use pubmine::{build_index, latest_terms, parse_corpus, CsvConfig, ExtractionConfig, LatestConfig};

const METADATA_CSV: &str = "\
pubmed_id,title,abstract,authors,journal,publish_time,doi
401,An mRNA vaccine platform,The mRNA vaccine induces strong responses; a second mRNA vaccine batch matches.,Kariko K,NEJM,2021-01-12,
402,Dose response of an mRNA vaccine,A second mRNA vaccine dose raises titers.,Sahin U,Lancet,2021-03-25,
403,Lipid carriers for mRNA delivery,Lipid nanoparticles protect the payload in transit.,Cullis P,J Control Release,2020-07-02,
404,PCR test validation across laboratories,The PCR test passes review in every site.,Corman V,J Clin Virol,2016-09-14,
405,Rapid PCR testing at scale,Rapid PCR workflows cut turnaround and simplify validation.,Drosten C,Eurosurveillance,2021-11-30,
406,Storage stability of an mRNA vaccine,Cold-chain storage keeps the mRNA vaccine potent.,Weissman D,Vaccine,2021-05-20,
";

fn show(terms: &[pubmine::LatestTerm]) {
    if terms.is_empty() {
        println!("  (none)");
    }
    for t in terms {
        let years: Vec<String> = t
            .by_year
            .iter()
            .map(|(year, count)| format!("{year}: {count}"))
            .collect();
        println!(
            "  {:13} ratio {:.2}, total {} ({})",
            t.term,
            t.ratio,
            t.total,
            years.join(", ")
        );
    }
}

fn main() -> Result<(), Box<dyn std::error::Error>> {
    println!("=== Latest Terminology ===\n");

    let corpus = parse_corpus(METADATA_CSV.as_bytes(), &CsvConfig::default())?;
    let index = build_index(&corpus, &ExtractionConfig::default());
    println!(
        "Most recent publication year: {}\n",
        index.max_document_year().expect("corpus is dated")
    );

    // Defaults: 30-year window, at least 80% of windowed occurrences in the
    // latest year, at least 3 occurrences overall.
    let config = LatestConfig::default();
    println!(
        "Kept (>= {:.0}% of occurrences in the latest year, >= {} total)",
        config.ratio_threshold * 100.0,
        config.min_total_count
    );
    println!("----------------------------------------------------------");
    show(&latest_terms(&index, &config)?);

    // PCR is indexed but split across 2016 and 2021, so its ratio fails;
    // VALIDATION appears only twice, below the occurrence floor.
    println!("\nRejected examples");
    println!("-----------------");
    for term in ["PCR", "VALIDATION"] {
        let posting = &index.entries[term];
        let years: Vec<String> = posting.count_by_year.keys().map(|y| y.to_string()).collect();
        println!(
            "  {:10} {} occurrences spread over {}",
            term,
            posting.total_count,
            years.join(" and ")
        );
    }

    // Counting publications instead of occurrences: MRNA is in 3 of its 4
    // publications in 2021 (75%, below the threshold) and drops out, while
    // MRNA VACCINE keeps a perfect ratio.
    let by_documents = LatestConfig { count_documents: true, ..LatestConfig::default() };
    println!("\nSame filter, counting publications instead of occurrences");
    println!("----------------------------------------------------------");
    show(&latest_terms(&index, &by_documents)?);

    // A lower bar keeps the spread-out phrases too.
    let relaxed = LatestConfig { ratio_threshold: 0.5, ..LatestConfig::default() };
    println!("\nRelaxed to 50%");
    println!("--------------");
    show(&latest_terms(&index, &relaxed)?);
    Ok(())
}
