//! Publication metadata: CSV parsing, normalization, and corpus statistics.
//!
//! The expected input is a CSV export in the shape of the common
//! publication-metadata dumps: one row per publication, a header row, and
//! columns for id, title, abstract, authors, venue, and publication date.
//! Column names are configurable through [`CsvConfig`]; the defaults match a
//! `pubmed_id,title,abstract,authors,journal,publish_time` layout.
//!
//! Normalization is deliberately light: author and venue strings are
//! uppercased and trimmed, nothing more. Spelling variants of the same
//! entity stay distinct, so entity counts are a lower bound on the real
//! counts — callers that need fuzzy merging should do it on top.

use std::collections::{BTreeMap, BTreeSet};
use std::io::Read;
use std::path::Path;

use serde::{Deserialize, Serialize};
use thiserror::Error;

/// One publication row after normalization.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Publication {
    pub id: String,
    pub title: String,
    /// Abstract text as given; `None` when the column is missing or empty.
    pub abstract_text: Option<String>,
    /// Uppercased, trimmed author names. Empty when the row lists none.
    pub authors: Vec<String>,
    /// Uppercased, trimmed venue name.
    pub venue: Option<String>,
    /// Publication year, taken as the first plausible 4-digit token of the
    /// date column.
    pub year: Option<i32>,
    pub doi: Option<String>,
}

/// An ordered collection of publications with unique ids.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Corpus {
    publications: Vec<Publication>,
}

impl Corpus {
    /// Builds a corpus from already-normalized publications, rejecting
    /// duplicate ids.
    pub fn from_publications(publications: Vec<Publication>) -> Result<Self, CorpusError> {
        let mut seen = BTreeSet::new();
        for p in &publications {
            if !seen.insert(p.id.clone()) {
                return Err(CorpusError::DuplicateId(p.id.clone()));
            }
        }
        Ok(Corpus { publications })
    }

    pub fn publications(&self) -> &[Publication] {
        &self.publications
    }

    pub fn len(&self) -> usize {
        self.publications.len()
    }

    pub fn is_empty(&self) -> bool {
        self.publications.is_empty()
    }

    pub fn get(&self, id: &str) -> Option<&Publication> {
        self.publications.iter().find(|p| p.id == id)
    }
}

/// Column layout and separators for a metadata CSV.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CsvConfig {
    pub id_column: String,
    pub title_column: String,
    pub abstract_column: String,
    pub authors_column: String,
    pub venue_column: String,
    pub date_column: String,
    pub doi_column: String,
    /// Separator between author names inside the authors cell.
    pub author_separator: char,
}

impl Default for CsvConfig {
    fn default() -> Self {
        CsvConfig {
            id_column: "pubmed_id".into(),
            title_column: "title".into(),
            abstract_column: "abstract".into(),
            authors_column: "authors".into(),
            venue_column: "journal".into(),
            date_column: "publish_time".into(),
            doi_column: "doi".into(),
            author_separator: ';',
        }
    }
}

#[derive(Debug, Error)]
pub enum CorpusError {
    /// Two rows share a publication id.
    #[error("duplicate publication id \"{0}\"")]
    DuplicateId(String),
    /// The header row lacks a required column.
    #[error("missing required column \"{0}\"")]
    MissingColumn(String),
    /// A data row is unreadable or lacks a required value. The line number
    /// counts from the top of the file, header included.
    #[error("malformed row at line {line}: {reason}")]
    MalformedRow { line: u64, reason: String },
    #[error("failed to read input: {0}")]
    Io(#[from] std::io::Error),
}

/// Parses a metadata CSV from a reader.
///
/// Id and title are required per row; everything else may be blank. Author
/// and venue strings are uppercased and trimmed. Duplicate ids and rows with
/// a blank id or title abort the parse.
pub fn parse_corpus<R: Read>(reader: R, config: &CsvConfig) -> Result<Corpus, CorpusError> {
    let mut csv_reader = csv::ReaderBuilder::new()
        .has_headers(true)
        .flexible(false)
        .from_reader(reader);

    let headers = csv_reader
        .headers()
        .map_err(|e| csv_row_error(&e))?
        .clone();
    let col = |name: &str| headers.iter().position(|h| h == name);

    let id_idx = col(&config.id_column)
        .ok_or_else(|| CorpusError::MissingColumn(config.id_column.clone()))?;
    let title_idx = col(&config.title_column)
        .ok_or_else(|| CorpusError::MissingColumn(config.title_column.clone()))?;
    // Optional columns may be absent from the header entirely.
    let abstract_idx = col(&config.abstract_column);
    let authors_idx = col(&config.authors_column);
    let venue_idx = col(&config.venue_column);
    let date_idx = col(&config.date_column);
    let doi_idx = col(&config.doi_column);

    let mut publications = Vec::new();
    let mut seen = BTreeSet::new();
    for record in csv_reader.records() {
        let record = record.map_err(|e| csv_row_error(&e))?;
        let line = record.position().map(|p| p.line()).unwrap_or(0);
        let field = |idx: Option<usize>| idx.and_then(|i| record.get(i)).unwrap_or("").trim();

        let id = field(Some(id_idx));
        if id.is_empty() {
            return Err(CorpusError::MalformedRow {
                line,
                reason: "empty id".into(),
            });
        }
        let title = field(Some(title_idx));
        if title.is_empty() {
            return Err(CorpusError::MalformedRow {
                line,
                reason: "empty title".into(),
            });
        }
        if !seen.insert(id.to_string()) {
            return Err(CorpusError::DuplicateId(id.to_string()));
        }

        let abstract_text = non_empty(field(abstract_idx));
        let authors = field(authors_idx)
            .split(config.author_separator)
            .map(|a| a.trim().to_uppercase())
            .filter(|a| !a.is_empty())
            .collect();
        let venue = non_empty(field(venue_idx)).map(|v| v.to_uppercase());
        let year = extract_year(field(date_idx));
        let doi = non_empty(field(doi_idx));

        publications.push(Publication {
            id: id.to_string(),
            title: title.to_string(),
            abstract_text,
            authors,
            venue,
            year,
            doi,
        });
    }

    Ok(Corpus { publications })
}

/// Parses a metadata CSV from a file path.
pub fn parse_corpus_from_path<P: AsRef<Path>>(
    path: P,
    config: &CsvConfig,
) -> Result<Corpus, CorpusError> {
    let file = std::fs::File::open(path)?;
    parse_corpus(file, config)
}

fn csv_row_error(err: &csv::Error) -> CorpusError {
    let line = err.position().map(|p| p.line()).unwrap_or(0);
    CorpusError::MalformedRow {
        line,
        reason: match err.kind() {
            csv::ErrorKind::UnequalLengths { .. } => "wrong number of fields".into(),
            csv::ErrorKind::Utf8 { .. } => "invalid UTF-8".into(),
            other => format!("{other:?}"),
        },
    }
}

fn non_empty(s: &str) -> Option<String> {
    if s.is_empty() {
        None
    } else {
        Some(s.to_string())
    }
}

/// Pulls the first 4-digit run in `[1800, 2100]` out of a date string.
/// Handles `2020-03-11`, `11 Mar 2020`, and bare `2020` alike.
fn extract_year(date: &str) -> Option<i32> {
    for run in date.split(|c: char| !c.is_ascii_digit()) {
        if run.len() == 4 {
            let year: i32 = run.parse().ok()?;
            if (1800..=2100).contains(&year) {
                return Some(year);
            }
        }
    }
    None
}

/// Summary statistics over a corpus. Field names are stable; this struct is
/// serialized as the `stats.json` output.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct StatsReport {
    pub publication_count: usize,
    pub abstract_count: usize,
    pub abstract_fraction: f64,
    pub author_count: usize,
    pub authors_at_least_2: usize,
    pub authors_at_least_10: usize,
    pub venue_count: usize,
    pub venues_at_least_2: usize,
    pub venues_at_least_10: usize,
    pub year_count: usize,
    pub mean_authors_per_publication: f64,
}

/// Computes corpus-level statistics.
///
/// "author_count" counts distinct normalized author strings; an author
/// appearing twice in one row still counts that row once. The mean divides
/// total author slots (row multiplicity included) by the publication count,
/// and is `0.0` for an empty corpus.
pub fn corpus_stats(corpus: &Corpus) -> StatsReport {
    let publication_count = corpus.len();
    let abstract_count = corpus
        .publications()
        .iter()
        .filter(|p| p.abstract_text.is_some())
        .count();

    let mut author_pubs: BTreeMap<&str, usize> = BTreeMap::new();
    let mut venue_pubs: BTreeMap<&str, usize> = BTreeMap::new();
    let mut years = BTreeSet::new();
    let mut author_slots = 0usize;
    for p in corpus.publications() {
        author_slots += p.authors.len();
        let distinct: BTreeSet<&str> = p.authors.iter().map(String::as_str).collect();
        for a in distinct {
            *author_pubs.entry(a).or_insert(0) += 1;
        }
        if let Some(v) = &p.venue {
            *venue_pubs.entry(v).or_insert(0) += 1;
        }
        if let Some(y) = p.year {
            years.insert(y);
        }
    }

    let at_least = |m: &BTreeMap<&str, usize>, k: usize| m.values().filter(|&&c| c >= k).count();

    StatsReport {
        publication_count,
        abstract_count,
        abstract_fraction: fraction(abstract_count, publication_count),
        author_count: author_pubs.len(),
        authors_at_least_2: at_least(&author_pubs, 2),
        authors_at_least_10: at_least(&author_pubs, 10),
        venue_count: venue_pubs.len(),
        venues_at_least_2: at_least(&venue_pubs, 2),
        venues_at_least_10: at_least(&venue_pubs, 10),
        year_count: years.len(),
        mean_authors_per_publication: fraction(author_slots, publication_count),
    }
}

fn fraction(num: usize, den: usize) -> f64 {
    if den == 0 {
        0.0
    } else {
        num as f64 / den as f64
    }
}

/// Which entity a ranking is taken over.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EntityField {
    Author,
    Venue,
    Year,
}

/// Ranks entities by the number of publications they appear in, keeping those
/// with at least `min_count`. Ties break by label ascending.
pub fn top_entities(corpus: &Corpus, field: EntityField, min_count: usize) -> Vec<(String, usize)> {
    let mut counts: BTreeMap<String, usize> = BTreeMap::new();
    for p in corpus.publications() {
        let labels: Vec<String> = match field {
            EntityField::Author => {
                let distinct: BTreeSet<&str> = p.authors.iter().map(String::as_str).collect();
                distinct.into_iter().map(str::to_string).collect()
            }
            EntityField::Venue => p.venue.iter().cloned().collect(),
            EntityField::Year => p.year.iter().map(i32::to_string).collect(),
        };
        for label in labels {
            *counts.entry(label).or_insert(0) += 1;
        }
    }
    let mut ranked: Vec<(String, usize)> = counts
        .into_iter()
        .filter(|(_, c)| *c >= min_count)
        .collect();
    ranked.sort_by(|a, b| b.1.cmp(&a.1).then_with(|| a.0.cmp(&b.0)));
    ranked
}
