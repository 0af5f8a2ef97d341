//! Graphs whose maximal cliques and anticliques together number at most
//! `n + 2`: recognition of the four structural classes and corpus checks.

mod classify;
mod enumerate;
mod graph6;

pub use classify::{
    check_t28, classify, verify_corpus, ClassLabel, ClassificationRecord, CorpusReport, LabelKind, Violation,
    MAX_CLASSIFY_ORDER,
};
pub use enumerate::{enumerate_graphs, MAX_ENUMERATION_ORDER};
pub use graph6::{from_graph6, read_graph6_corpus, to_graph6};
