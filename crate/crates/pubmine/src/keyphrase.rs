//! Keyphrase extraction and the phrase → publication index.
//!
//! Extraction is intentionally simple and transparent:
//!
//! 1. Uppercase the text and split into tokens on whitespace and punctuation,
//!    keeping internal hyphens (`BAT-ORIGIN` stays one token). Unicode hyphen
//!    variants and en-dashes fold to ASCII `-`; purely numeric tokens drop.
//! 2. Stopwords act as separators: n-grams are drawn only from maximal
//!    stopword-free runs, never across one.
//! 3. Hyphenated tokens form a composed-term lexicon that is always counted,
//!    even when the n-gram range or stopword list would skip them.
//!
//! There is no stemming — `VIRUS` and `VIRUSES` stay distinct phrases.
//!
//! [`build_index`] applies this per document (title plus abstract when
//! present) and aggregates into a [`KeyphraseIndex`]: for every surviving
//! phrase, the set of publications containing it and occurrence counts per
//! publication year. Phrases below the document-frequency floor are pruned.
//! The index serializes to JSON deterministically — map keys are sorted, so
//! equal indexes produce identical bytes.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::de::{self, Deserializer, Visitor};
use serde::{Deserialize, Serialize, Serializer};

use crate::corpus::{Corpus, Publication};

/// The default stopword list (SMART-style English function words).
const DEFAULT_STOPWORDS: &str = include_str!("stopwords.txt");

/// Returns the built-in stopword list as a lowercase set.
pub fn default_stopwords() -> BTreeSet<String> {
    parse_stopword_list(DEFAULT_STOPWORDS)
}

/// Parses a stopword list: one word per line, trimmed, lowercased, blank
/// lines skipped.
pub fn parse_stopword_list(text: &str) -> BTreeSet<String> {
    text.lines()
        .map(|w| w.trim().to_lowercase())
        .filter(|w| !w.is_empty())
        .collect()
}

/// Settings for phrase extraction and index pruning.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExtractionConfig {
    /// Smallest n-gram length, at least 1.
    pub ngram_min: usize,
    /// Largest n-gram length, at least `ngram_min`.
    pub ngram_max: usize,
    /// Phrases in fewer documents than this are pruned from the index.
    pub min_doc_frequency: usize,
    /// Lowercase words that separate n-gram runs.
    pub stopwords: BTreeSet<String>,
}

impl Default for ExtractionConfig {
    fn default() -> Self {
        ExtractionConfig {
            ngram_min: 1,
            ngram_max: 3,
            min_doc_frequency: 2,
            stopwords: default_stopwords(),
        }
    }
}

impl ExtractionConfig {
    pub fn is_stopword(&self, token: &str) -> bool {
        self.stopwords.contains(&token.to_lowercase())
    }
}

/// Splits text into normalized tokens.
///
/// Tokens are uppercased runs of alphanumeric characters and internal
/// hyphens. Unicode hyphens and en-dashes fold to `-`; leading and trailing
/// hyphens are trimmed; tokens without a single alphabetic character (bare
/// numbers, number ranges) are dropped.
pub fn tokenize(text: &str) -> Vec<String> {
    let mut tokens = Vec::new();
    let mut current = String::new();
    for ch in text.to_uppercase().chars() {
        let ch = fold_hyphen(ch);
        if ch.is_alphanumeric() || ch == '-' {
            current.push(ch);
        } else {
            flush_token(&mut current, &mut tokens);
        }
    }
    flush_token(&mut current, &mut tokens);
    tokens
}

fn fold_hyphen(ch: char) -> char {
    match ch {
        // hyphen, non-breaking hyphen, figure dash, en-dash, minus sign
        '\u{2010}' | '\u{2011}' | '\u{2012}' | '\u{2013}' | '\u{2212}' => '-',
        other => other,
    }
}

fn flush_token(current: &mut String, tokens: &mut Vec<String>) {
    let trimmed = current.trim_matches('-');
    if !trimmed.is_empty() && trimmed.chars().any(char::is_alphabetic) {
        tokens.push(trimmed.to_string());
    }
    current.clear();
}

/// Emits every n-gram of length `ngram_min..=ngram_max` drawn from maximal
/// stopword-free runs of `tokens`, with multiplicity, joined by single
/// spaces. Stopwords separate runs; no n-gram spans one.
pub fn extract_ngrams(tokens: &[String], config: &ExtractionConfig) -> Vec<String> {
    assert!(
        config.ngram_min >= 1 && config.ngram_min <= config.ngram_max,
        "invalid n-gram range [{}, {}]",
        config.ngram_min,
        config.ngram_max
    );
    let mut out = Vec::new();
    let mut run_start = 0;
    for i in 0..=tokens.len() {
        let boundary = i == tokens.len() || config.is_stopword(&tokens[i]);
        if boundary {
            emit_run(&tokens[run_start..i], config, &mut out);
            run_start = i + 1;
        }
    }
    out
}

fn emit_run(run: &[String], config: &ExtractionConfig, out: &mut Vec<String>) {
    for start in 0..run.len() {
        for n in config.ngram_min..=config.ngram_max {
            if start + n > run.len() {
                break;
            }
            out.push(run[start..start + n].join(" "));
        }
    }
}

/// Collects the corpus-wide composed-term lexicon: every hyphen-containing
/// token in any title or abstract.
pub fn seed_lexicon(corpus: &Corpus) -> BTreeSet<String> {
    let mut lexicon = BTreeSet::new();
    for p in corpus.publications() {
        for token in doc_tokens(p) {
            if token.contains('-') {
                lexicon.insert(token);
            }
        }
    }
    lexicon
}

fn doc_tokens(p: &Publication) -> Vec<String> {
    let mut tokens = tokenize(&p.title);
    if let Some(abstract_text) = &p.abstract_text {
        tokens.extend(tokenize(abstract_text));
    }
    tokens
}

/// Year bucket for occurrence counts; publications without a parseable date
/// fall into [`YearKey::Unknown`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum YearKey {
    Year(i32),
    Unknown,
}

impl YearKey {
    pub fn from_year(year: Option<i32>) -> Self {
        match year {
            Some(y) => YearKey::Year(y),
            None => YearKey::Unknown,
        }
    }

    pub fn year(&self) -> Option<i32> {
        match self {
            YearKey::Year(y) => Some(*y),
            YearKey::Unknown => None,
        }
    }
}

impl fmt::Display for YearKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            YearKey::Year(y) => write!(f, "{y}"),
            YearKey::Unknown => write!(f, "unknown"),
        }
    }
}

impl FromStr for YearKey {
    type Err = std::num::ParseIntError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        if s == "unknown" {
            Ok(YearKey::Unknown)
        } else {
            s.parse::<i32>().map(YearKey::Year)
        }
    }
}

impl Serialize for YearKey {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for YearKey {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        struct YearKeyVisitor;
        impl Visitor<'_> for YearKeyVisitor {
            type Value = YearKey;
            fn expecting(&self, f: &mut fmt::Formatter) -> fmt::Result {
                f.write_str("a year number or \"unknown\"")
            }
            fn visit_str<E: de::Error>(self, v: &str) -> Result<YearKey, E> {
                v.parse().map_err(|_| E::custom(format!("bad year key {v:?}")))
            }
        }
        deserializer.deserialize_str(YearKeyVisitor)
    }
}

/// Where a phrase occurs: which publications, and how often per year.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Posting {
    /// Ids of publications containing the phrase at least once.
    #[serde(rename = "docs")]
    pub doc_ids: BTreeSet<String>,
    /// Occurrence counts bucketed by publication year.
    #[serde(rename = "years")]
    pub count_by_year: BTreeMap<YearKey, u64>,
    /// Total occurrences across the corpus.
    #[serde(rename = "total")]
    pub total_count: u64,
}

/// Per-document metadata kept alongside the postings so that downstream
/// operations (author graphs, per-document year counts) can run from a saved
/// index file alone.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DocInfo {
    pub year: Option<i32>,
    pub authors: Vec<String>,
}

/// The phrase → publications index.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct KeyphraseIndex {
    pub config: ExtractionConfig,
    /// Metadata for every indexed document, keyed by publication id.
    pub documents: BTreeMap<String, DocInfo>,
    /// Postings keyed by phrase.
    pub entries: BTreeMap<String, Posting>,
}

impl KeyphraseIndex {
    /// Serializes to pretty JSON with a trailing newline. Output bytes are a
    /// pure function of the index contents.
    pub fn to_json_string(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("index serializes");
        s.push('\n');
        s
    }

    pub fn from_json_str(json: &str) -> Result<Self, serde_json::Error> {
        serde_json::from_str(json)
    }

    /// Largest known publication year across indexed documents.
    pub fn max_document_year(&self) -> Option<i32> {
        self.documents.values().filter_map(|d| d.year).max()
    }

    pub fn get(&self, phrase: &str) -> Option<&Posting> {
        self.entries.get(phrase)
    }
}

/// Counts every phrase occurrence in one document: n-grams from stopword-free
/// runs plus composed (hyphenated) terms the n-gram pass could not have
/// counted itself.
fn phrase_counts(p: &Publication, config: &ExtractionConfig) -> BTreeMap<String, u64> {
    let tokens = doc_tokens(p);
    let mut counts: BTreeMap<String, u64> = BTreeMap::new();
    for phrase in extract_ngrams(&tokens, config) {
        *counts.entry(phrase).or_insert(0) += 1;
    }
    for token in &tokens {
        if token.contains('-') {
            // Already counted as a unigram unless the range starts above 1 or
            // the token doubles as a stopword; don't double count.
            let counted = config.ngram_min == 1 && !config.is_stopword(token);
            if !counted {
                *counts.entry(token.clone()).or_insert(0) += 1;
            }
        }
    }
    counts
}

/// Builds the index over a whole corpus.
///
/// Extraction runs per document in parallel; the merge is a commutative
/// fold, so the result is independent of document order and thread count.
pub fn build_index(corpus: &Corpus, config: &ExtractionConfig) -> KeyphraseIndex {
    assert!(config.min_doc_frequency >= 1, "min_doc_frequency must be at least 1");

    let per_doc: Vec<(&Publication, BTreeMap<String, u64>)> = corpus
        .publications()
        .par_iter()
        .map(|p| (p, phrase_counts(p, config)))
        .collect();

    let mut documents = BTreeMap::new();
    let mut entries: BTreeMap<String, Posting> = BTreeMap::new();
    for (p, counts) in per_doc {
        documents.insert(
            p.id.clone(),
            DocInfo {
                year: p.year,
                authors: p.authors.clone(),
            },
        );
        let year_key = YearKey::from_year(p.year);
        for (phrase, count) in counts {
            let posting = entries.entry(phrase).or_default();
            posting.doc_ids.insert(p.id.clone());
            *posting.count_by_year.entry(year_key).or_insert(0) += count;
            posting.total_count += count;
        }
    }

    entries.retain(|_, posting| posting.doc_ids.len() >= config.min_doc_frequency);

    KeyphraseIndex {
        config: config.clone(),
        documents,
        entries,
    }
}
