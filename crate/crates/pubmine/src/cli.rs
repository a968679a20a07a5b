//! The `pubmine` command-line interface.
//!
//! Subcommands mirror the library workflows:
//!
//! * `ingest` — CSV in, `index.json` + `stats.json` out
//! * `stats` — CSV in, statistics to stdout and `stats.json`
//! * `focus` — index in, topic selection + term graphs out
//! * `latest` — index in, recency-filtered terms, co-occurrence graph, and
//!   communities out
//! * `communities` — JSON graph in, detected communities out
//! * `export` — JSON graph in, DOT/GraphML/JSON out
//!
//! Output files are byte-deterministic for the same input and flags.

use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand};
use serde::Serialize;
use thiserror::Error;

use crate::corpus::{corpus_stats, parse_corpus_from_path, CorpusError, CsvConfig};
use crate::graph::{detect_communities, ExportFormat, GraphDocument, GraphError};
use crate::keyphrase::{
    build_index, default_stopwords, parse_stopword_list, ExtractionConfig, KeyphraseIndex,
};
use crate::latest::{
    community_publication_graph, latest_terms, latest_topic_graph, LatestConfig, LatestError,
};
use crate::topic_focus::{
    load_exclusions, select_topic_terms, term_author_graph_from_index, term_publication_graph,
    FocusError,
};

#[derive(Debug, Parser)]
#[command(
    name = "pubmine",
    version,
    about = "Mine keyphrases, topic graphs, and term communities from publication metadata CSV"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Parse a metadata CSV and write the keyphrase index plus statistics
    Ingest {
        /// Input metadata CSV
        #[arg(long)]
        input: PathBuf,
        /// Output directory for index.json and stats.json
        #[arg(long)]
        out: PathBuf,
        /// Smallest n-gram length
        #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u64).range(1..))]
        ngram_min: u64,
        /// Largest n-gram length
        #[arg(long, default_value_t = 3, value_parser = clap::value_parser!(u64).range(1..))]
        ngram_max: u64,
        /// Drop phrases appearing in fewer publications than this
        #[arg(long, default_value_t = 2, value_parser = clap::value_parser!(u64).range(1..))]
        min_df: u64,
        /// Replace the built-in stopword list (one word per line)
        #[arg(long)]
        stopwords: Option<PathBuf>,
    },
    /// Compute corpus statistics from a metadata CSV
    Stats {
        /// Input metadata CSV
        #[arg(long)]
        input: PathBuf,
        /// Output directory for stats.json
        #[arg(long)]
        out: PathBuf,
    },
    /// Select indexed terms matching a pattern and write topic graphs
    Focus {
        /// Index file written by `ingest`
        #[arg(long)]
        input: PathBuf,
        /// Substring that selects terms (case-insensitive)
        #[arg(long)]
        pattern: String,
        /// File of phrases to exclude, one per line
        #[arg(long)]
        exclusions: Option<PathBuf>,
        /// Output directory for selection.json and graph files
        #[arg(long)]
        out: PathBuf,
    },
    /// Keep terms concentrated in the latest year; write their graph and communities
    Latest {
        /// Index file written by `ingest`
        #[arg(long)]
        input: PathBuf,
        /// Output directory
        #[arg(long)]
        out: PathBuf,
        /// Minimum share of windowed occurrences in the latest year
        #[arg(long, default_value_t = 0.8, value_parser = parse_ratio)]
        ratio: f64,
        /// Window size in years, latest year included
        #[arg(long, default_value_t = 30, value_parser = clap::value_parser!(i32).range(1..))]
        window: i32,
        /// Minimum windowed occurrence total per term
        #[arg(long, default_value_t = 3, value_parser = clap::value_parser!(u64).range(1..))]
        min_count: u64,
        /// Drop co-occurrence edges lighter than this
        #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u64).range(1..))]
        min_edge_weight: u64,
        /// Count publications per year instead of occurrences
        #[arg(long)]
        doc_counts: bool,
    },
    /// Detect communities in a JSON co-occurrence graph
    Communities {
        /// Graph document (JSON) with term nodes
        #[arg(long)]
        input: PathBuf,
        /// Output directory for communities.json
        #[arg(long)]
        out: PathBuf,
    },
    /// Convert a JSON graph document to another format
    Export {
        /// Graph document (JSON)
        #[arg(long)]
        input: PathBuf,
        /// Target format
        #[arg(long, value_enum)]
        format: ExportFormat,
        /// Output directory
        #[arg(long)]
        out: PathBuf,
    },
}

impl clap::ValueEnum for ExportFormat {
    fn value_variants<'a>() -> &'a [Self] {
        &[ExportFormat::Dot, ExportFormat::GraphMl, ExportFormat::Json]
    }

    fn to_possible_value(&self) -> Option<clap::builder::PossibleValue> {
        Some(clap::builder::PossibleValue::new(match self {
            ExportFormat::Dot => "dot",
            ExportFormat::GraphMl => "graphml",
            ExportFormat::Json => "json",
        }))
    }
}

fn parse_ratio(s: &str) -> Result<f64, String> {
    let ratio: f64 = s.parse().map_err(|e| format!("{e}"))?;
    if ratio > 0.0 && ratio <= 1.0 {
        Ok(ratio)
    } else {
        Err("ratio must be in (0, 1]".into())
    }
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{}: {source}", .path.display())]
    Corpus {
        path: PathBuf,
        #[source]
        source: CorpusError,
    },
    #[error("{}: {source}", .path.display())]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
    #[error("{}: {source}", .path.display())]
    BadInput {
        path: PathBuf,
        #[source]
        source: GraphError,
    },
    #[error("{}: not a valid index file: {source}", .path.display())]
    BadIndex {
        path: PathBuf,
        #[source]
        source: serde_json::Error,
    },
    #[error(transparent)]
    Focus(#[from] FocusError),
    #[error(transparent)]
    Latest(#[from] LatestError),
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error("{0}")]
    InvalidArguments(String),
}

/// Runs one parsed command to completion.
pub fn run(cli: Cli) -> Result<(), CliError> {
    match cli.command {
        Command::Ingest {
            input,
            out,
            ngram_min,
            ngram_max,
            min_df,
            stopwords,
        } => cmd_ingest(&input, &out, ngram_min as usize, ngram_max as usize, min_df as usize, stopwords.as_deref()),
        Command::Stats { input, out } => cmd_stats(&input, &out),
        Command::Focus {
            input,
            pattern,
            exclusions,
            out,
        } => cmd_focus(&input, &pattern, exclusions.as_deref(), &out),
        Command::Latest {
            input,
            out,
            ratio,
            window,
            min_count,
            min_edge_weight,
            doc_counts,
        } => {
            let config = LatestConfig {
                window_years: window,
                latest_year: None,
                ratio_threshold: ratio,
                min_total_count: min_count,
                count_documents: doc_counts,
            };
            cmd_latest(&input, &out, &config, min_edge_weight)
        }
        Command::Communities { input, out } => cmd_communities(&input, &out),
        Command::Export { input, format, out } => cmd_export(&input, format, &out),
    }
}

pub fn cmd_ingest(
    input: &Path,
    out: &Path,
    ngram_min: usize,
    ngram_max: usize,
    min_df: usize,
    stopwords: Option<&Path>,
) -> Result<(), CliError> {
    if ngram_min > ngram_max {
        return Err(CliError::InvalidArguments(format!(
            "--ngram-min {ngram_min} exceeds --ngram-max {ngram_max}"
        )));
    }
    let stopwords = match stopwords {
        Some(path) => parse_stopword_list(&read_text(path)?),
        None => default_stopwords(),
    };
    let config = ExtractionConfig {
        ngram_min,
        ngram_max,
        min_doc_frequency: min_df,
        stopwords,
    };

    let corpus = parse_corpus_from_path(input, &CsvConfig::default()).map_err(|source| {
        CliError::Corpus {
            path: input.to_path_buf(),
            source,
        }
    })?;
    let index = build_index(&corpus, &config);
    let stats = corpus_stats(&corpus);

    ensure_dir(out)?;
    write_text(&out.join("index.json"), &index.to_json_string())?;
    write_text(&out.join("stats.json"), &pretty_json(&stats))?;
    println!(
        "indexed {} publications into {} phrases",
        corpus.len(),
        index.entries.len()
    );
    Ok(())
}

pub fn cmd_stats(input: &Path, out: &Path) -> Result<(), CliError> {
    let corpus = parse_corpus_from_path(input, &CsvConfig::default()).map_err(|source| {
        CliError::Corpus {
            path: input.to_path_buf(),
            source,
        }
    })?;
    let stats = corpus_stats(&corpus);
    let json = pretty_json(&stats);
    ensure_dir(out)?;
    write_text(&out.join("stats.json"), &json)?;
    print!("{json}");
    Ok(())
}

pub fn cmd_focus(
    input: &Path,
    pattern: &str,
    exclusions: Option<&Path>,
    out: &Path,
) -> Result<(), CliError> {
    let index = load_index(input)?;
    let exclusions = match exclusions {
        Some(path) => load_exclusions(path).map_err(|source| CliError::Io {
            path: path.to_path_buf(),
            source,
        })?,
        None => Default::default(),
    };

    let selection = select_topic_terms(&index, pattern, &exclusions);
    let term_pub = term_publication_graph(&index, &selection)?;
    let term_author = term_author_graph_from_index(&index, &selection)?;

    ensure_dir(out)?;
    write_text(&out.join("selection.json"), &pretty_json(&selection))?;
    write_text(&out.join("term_pub.dot"), &term_pub.export(ExportFormat::Dot))?;
    write_text(
        &out.join("term_author.dot"),
        &term_author.export(ExportFormat::Dot),
    )?;
    println!("{} terms match \"{}\"", selection.terms.len(), pattern);
    Ok(())
}

pub fn cmd_latest(
    input: &Path,
    out: &Path,
    config: &LatestConfig,
    min_edge_weight: u64,
) -> Result<(), CliError> {
    let index = load_index(input)?;
    let terms = latest_terms(&index, config)?;
    let graph = latest_topic_graph(&index, config, min_edge_weight)?;
    let communities = detect_communities(&graph);

    ensure_dir(out)?;
    write_text(&out.join("latest_terms.json"), &pretty_json(&terms))?;
    write_text(&out.join("cooccurrence.dot"), &graph.export(ExportFormat::Dot))?;
    write_text(&out.join("communities.json"), &pretty_json(&communities))?;
    for community in &communities {
        let drill_down = community_publication_graph(&index, community)?;
        write_text(
            &out.join(format!("community_{}_pubs.dot", community.id)),
            &drill_down.export(ExportFormat::Dot),
        )?;
    }
    println!("{} latest terms in {} communities", terms.len(), communities.len());
    Ok(())
}

pub fn cmd_communities(input: &Path, out: &Path) -> Result<(), CliError> {
    let graph = load_graph_document(input)?
        .into_cooccurrence()
        .map_err(|source| CliError::BadInput {
            path: input.to_path_buf(),
            source,
        })?;
    let communities = detect_communities(&graph);
    ensure_dir(out)?;
    write_text(&out.join("communities.json"), &pretty_json(&communities))?;
    println!("{} communities", communities.len());
    Ok(())
}

pub fn cmd_export(input: &Path, format: ExportFormat, out: &Path) -> Result<(), CliError> {
    let document = load_graph_document(input)?;
    let extension = match format {
        ExportFormat::Dot => "dot",
        ExportFormat::GraphMl => "graphml",
        ExportFormat::Json => "json",
    };
    let stem = input
        .file_stem()
        .map(|s| s.to_string_lossy().into_owned())
        .unwrap_or_else(|| "graph".into());
    ensure_dir(out)?;
    let target = out.join(format!("{stem}.{extension}"));
    write_text(&target, &document.render(format))?;
    println!("wrote {}", target.display());
    Ok(())
}

fn load_index(path: &Path) -> Result<KeyphraseIndex, CliError> {
    KeyphraseIndex::from_json_str(&read_text(path)?).map_err(|source| CliError::BadIndex {
        path: path.to_path_buf(),
        source,
    })
}

fn load_graph_document(path: &Path) -> Result<GraphDocument, CliError> {
    GraphDocument::from_json(&read_text(path)?).map_err(|source| CliError::BadInput {
        path: path.to_path_buf(),
        source,
    })
}

fn read_text(path: &Path) -> Result<String, CliError> {
    std::fs::read_to_string(path).map_err(|source| CliError::Io {
        path: path.to_path_buf(),
        source,
    })
}

fn write_text(path: &Path, content: &str) -> Result<(), CliError> {
    std::fs::write(path, content).map_err(|source| CliError::Io {
        path: path.to_path_buf(),
        source,
    })
}

fn ensure_dir(path: &Path) -> Result<(), CliError> {
    std::fs::create_dir_all(path).map_err(|source| CliError::Io {
        path: path.to_path_buf(),
        source,
    })
}

fn pretty_json<T: Serialize>(value: &T) -> String {
    let mut json = serde_json::to_string_pretty(value).expect("value serializes");
    json.push('\n');
    json
}
