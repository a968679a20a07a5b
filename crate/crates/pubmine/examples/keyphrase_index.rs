//! Keyphrase extraction and the publication index.
//!
//! Builds a keyphrase index from an embedded corpus: titles and abstracts
//! are tokenized, n-grams are drawn from stopword-free runs, hyphenated
//! composed terms are kept whole, and phrases appearing in too few
//! publications are pruned. Shows the resulting postings and the JSON form.
//!
//! # Run
//!
//! ```bash
//! cargo run --example keyphrase_index
//! ```

use pubmine::{build_index, parse_corpus, tokenize, CsvConfig, ExtractionConfig, KeyphraseIndex};

const METADATA_CSV: &str = "\
pubmed_id,title,abstract,authors,journal,publish_time,doi
201,Spike protein structure of a bat-origin coronavirus,The spike protein of this bat-origin coronavirus is resolved at high resolution.,Zhou P,J Virol,2020-02-03,
202,Receptor binding by the spike protein,Receptor binding depends on spike protein conformation.,Li F,Cell,2020-06-17,
203,Antibody escape and the spike protein,Mutations drive antibody escape without losing receptor binding.,Wang C,Nature,2021-03-09,
204,A bat-origin virus survey in caves,We sample caves for bat-origin viruses over three seasons.,Shi Z,Emerg Infect Dis,2019-08-25,
205,Thermal stability of viral proteins,Thermal stability varies across viral proteins and buffers.,Kim H,Proteins,2018-10-30,
206,One-off methods note,A one-off methods note with unique wording.,Park S,Methods,2017-05-12,
";

fn main() -> Result<(), Box<dyn std::error::Error>> {
    println!("=== Keyphrase Index ===\n");

    println!("Tokenization");
    println!("------------");
    let sample = "Spike protein structure of a bat-origin coronavirus";
    println!("  input:  {sample}");
    println!("  tokens: {:?}", tokenize(sample));
    println!("  (hyphenated words stay whole; case and punctuation are normalized)\n");

    let corpus = parse_corpus(METADATA_CSV.as_bytes(), &CsvConfig::default())?;
    let config = ExtractionConfig::default(); // 1..=3-grams, min_doc_frequency 2
    let index = build_index(&corpus, &config);

    println!("Indexed phrases (in at least {} publications)", config.min_doc_frequency);
    println!("--------------------------------------------");
    for (phrase, posting) in &index.entries {
        println!(
            "  {:18} {} publications, {} occurrences",
            phrase,
            posting.doc_ids.len(),
            posting.total_count
        );
    }

    println!("\nOne posting in full");
    println!("-------------------");
    let bat = &index.entries["BAT-ORIGIN"];
    println!("  BAT-ORIGIN appears in {:?}", bat.doc_ids);
    for (year, count) in &bat.count_by_year {
        println!("    {year}: {count} occurrence(s)");
    }

    // Pruning is by publication count, not raw frequency: CORONAVIRUS occurs
    // twice but only inside publication 201, so it is dropped.
    println!("\nPruned: CORONAVIRUS indexed? {}", index.entries.contains_key("CORONAVIRUS"));
    println!("Pruned: ONE-OFF indexed?     {}", index.entries.contains_key("ONE-OFF"));

    println!("\nJSON round-trip");
    println!("---------------");
    let json = index.to_json_string();
    let reloaded = KeyphraseIndex::from_json_str(&json)?;
    println!("  serialized {} bytes; reloaded == original: {}", json.len(), reloaded == index);
    Ok(())
}
