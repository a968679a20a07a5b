//! Corpus mining for scientific-publication metadata.
//!
//! `pubmine` reads publication metadata (id, title, abstract, authors, venue,
//! date) from CSV files, extracts keyphrases from titles and abstracts, and
//! turns the results into graphs that can be exported for inspection in
//! standard tools.
//!
//! The pieces compose into two main workflows:
//!
//! * **Topic focus** — build a [`keyphrase::KeyphraseIndex`], select every
//!   indexed phrase containing a pattern (e.g. `ORIGIN`), and materialize
//!   bipartite term↔publication and term↔author graphs for that topic slice.
//! * **Latest terminology** — keep only phrases whose recent usage is
//!   concentrated in the most recent year of the corpus, build their
//!   co-occurrence graph, and partition it into connected communities.
//!
//! Graphs serialize to DOT, GraphML, or a plain JSON document; the JSON form
//! round-trips back into graph values. All outputs are byte-deterministic for
//! a given input, regardless of row order or thread count.
//!
//! The `examples/` directory has one runnable program per capability; the
//! `pubmine` binary wires the same operations into a small CLI.

pub mod cli;
pub mod corpus;
pub mod graph;
pub mod keyphrase;
pub mod latest;
pub mod topic_focus;

pub use corpus::{parse_corpus, corpus_stats, top_entities, Corpus, CorpusError, CsvConfig, EntityField, Publication, StatsReport};
pub use graph::{build_cooccurrence, detect_communities, modularity, BipartiteGraph, Community, CooccurrenceGraph, ExportFormat, GraphDocument, GraphError, NodeKind};
pub use keyphrase::{build_index, extract_ngrams, seed_lexicon, tokenize, ExtractionConfig, KeyphraseIndex, Posting, YearKey};
pub use latest::{latest_terms, latest_topic_graph, community_publication_graph, LatestConfig, LatestError, LatestTerm};
pub use topic_focus::{select_topic_terms, term_publication_graph, term_author_graph, multi_term_publications, FocusError, TopicSelection};
