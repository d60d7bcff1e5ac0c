//! File formats: dictionary and wordnet TSV, corpus JSONL, Pharaoh
//! alignment text, and the generated sense inventory.
//!
//! All formats are UTF-8 with LF line endings. Loaders either parse
//! their input or fail with a located error; records that are
//! structurally valid but violate an invariant (e.g. an alignment link
//! out of range) are skipped and reported, never silently dropped.

pub mod corpus;
pub mod dictionary;
pub mod inventory;
pub mod pharaoh;
pub mod wordnet;

pub use corpus::{load_corpus, override_base_links, CorpusDocument, CorpusLoad, SkippedRecord};
pub use dictionary::load_dictionary;
pub use inventory::{
    read_inventory_jsonl, read_inventory_keys, write_inventory, write_inventory_jsonl,
    write_inventory_tsv, InventoryFormat,
};
pub use pharaoh::{
    format_pharaoh, load_gold_file, load_pharaoh_file, parse_gold_pharaoh, parse_pharaoh,
};
pub use wordnet::{load_gold_senses, load_wordnet_tsv};

use thiserror::Error;

/// Why an input could not be loaded.
#[derive(Debug, Error)]
pub enum LoadError {
    #[error(transparent)]
    Io(#[from] std::io::Error),
    /// A malformed line, with its 1-based line number.
    #[error("line {line}: {message}")]
    Format { line: usize, message: String },
    /// A whole-input problem, such as mismatched file lengths.
    #[error("{0}")]
    Invalid(String),
}

impl LoadError {
    pub(crate) fn format(line: usize, message: impl Into<String>) -> LoadError {
        LoadError::Format {
            line,
            message: message.into(),
        }
    }
}
