//! Dictionary-based word alignment and cross-lingual sense projection.
//!
//! The crate implements a project-and-filter pipeline for carrying sense
//! tags from an annotated source-language corpus onto its translation:
//!
//! * [`dbalign`] — a three-pass aligner that merges base-aligner links
//!   with links suggested by a bilingual dictionary, resolving ties with
//!   a diagonal heuristic and never emitting conflicting links.
//! * [`project`] — the projection engine: each sense-tagged content word
//!   that is aligned to a target token yields a `(lemma, synset)` sense,
//!   provided the pair is confirmed by the dictionary or shares its
//!   orthographic form.
//! * [`io`] — the file formats gluing the pipeline together: dictionary
//!   and wordnet TSV, corpus JSONL, Pharaoh alignments, and the sense
//!   inventory in TSV or JSONL.
//! * [`eval`] — precision / recall / F1 / AER against gold links and
//!   gold sense lists.
//!
//! Numeric code (the diagonal deviation and the evaluation metrics) is
//! generic over a [`scalar::Scalar`]; the default instantiation is the
//! exact rational [`Rational`], so link selection and reported metrics
//! are free of floating-point noise. `f64` works as well when speed
//! matters more than exactness.

pub mod alignment;
pub mod dbalign;
pub mod dictionary;
pub mod eval;
pub mod io;
pub mod lex;
pub mod mwe;
pub mod normalize;
pub mod project;
pub mod scalar;
pub mod sense;

pub use alignment::{AlignmentLink, AlignmentSet};
pub use dbalign::{
    dbalign, dbalign_with, diagonal_deviation, diagonal_heuristic, dictionary_links, PassKind,
};
pub use dictionary::{Dictionary, LangSide};
pub use eval::{
    alignment_counts, eval_alignment, eval_inventory, inventory_counts, sense_key_counts,
    AlignmentGold, EvalCounts, EvalReport,
};
pub use lex::{BitextPair, Pos, Sentence, Token};
pub use mwe::{merge_mwes, merge_mwes_with_map, merge_pair_mwes};
pub use normalize::{normalize_entry, MWE_SEPARATOR};
pub use project::{
    orthographic_match, pos_compatible, project_corpus, project_sentence, ProjectionConfig,
    WordnetIndex,
};
pub use scalar::Scalar;
pub use sense::{ProjectionRule, Provenance, SenseInventory, SenseKey, SenseRecord};

/// Exact rational scalar, the default numeric type of the crate.
///
/// Sentence indices and link counts are small, so `u64` numerators and
/// denominators never overflow in practice.
pub type Rational = num_rational::Ratio<u64>;
