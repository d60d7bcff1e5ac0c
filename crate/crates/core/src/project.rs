//! ExpandNet: project-and-filter sense generation.
//!
//! Every sense-tagged content word that is aligned to a target token is a
//! projection candidate. The candidate survives when the token pair is in
//! the bilingual dictionary, or (by default) when the two tokens share
//! their orthographic form — the escape hatch for proper nouns and rare
//! words the dictionary misses. An optional POS filter additionally
//! requires matching coarse POS tags, and lemmas already listed for the
//! synset in an existing wordnet are not re-generated.

use std::collections::{BTreeMap, BTreeSet};

use crate::alignment::AlignmentSet;
use crate::dbalign::dbalign;
use crate::dictionary::Dictionary;
use crate::lex::{BitextPair, Token};
use crate::normalize::normalize_entry;
use crate::sense::{ProjectionRule, Provenance, SenseInventory, SenseRecord};

/// Synset → known target lemmas, used to skip senses that already exist.
/// Lemmas are normalized on insertion and on lookup.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct WordnetIndex {
    synsets: BTreeMap<String, BTreeSet<String>>,
}

impl WordnetIndex {
    pub fn new() -> WordnetIndex {
        WordnetIndex::default()
    }

    pub fn insert(&mut self, synset: impl Into<String>, lemma: &str) {
        self.synsets
            .entry(synset.into())
            .or_default()
            .insert(normalize_entry(lemma));
    }

    /// True when `lemma` is already listed for `synset`.
    pub fn contains(&self, synset: &str, lemma: &str) -> bool {
        self.synsets
            .get(synset)
            .is_some_and(|lemmas| lemmas.contains(&normalize_entry(lemma)))
    }

    /// Number of synsets with at least one lemma.
    pub fn len(&self) -> usize {
        self.synsets.len()
    }

    pub fn is_empty(&self) -> bool {
        self.synsets.is_empty()
    }
}

/// Projection switches. The orthographic exception is on and the POS
/// filter off by default; without an existing wordnet every projected
/// lemma counts as novel.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProjectionConfig {
    pub pos_filter_enabled: bool,
    pub orthographic_exception_enabled: bool,
    pub existing_wordnet: Option<WordnetIndex>,
}

impl Default for ProjectionConfig {
    fn default() -> ProjectionConfig {
        ProjectionConfig {
            pos_filter_enabled: false,
            orthographic_exception_enabled: true,
            existing_wordnet: None,
        }
    }
}

/// True when the two tokens have the same orthographic form: case-folded,
/// separator-normalized, byte-identical. No diacritic stripping.
pub fn orthographic_match(x: &Token, y: &Token) -> bool {
    normalize_entry(&x.surface) == normalize_entry(&y.surface)
}

/// POS filter predicate. Both tags present: they must be equal open
/// classes. An `Other` tag on either side marks a function word and
/// fails. A missing tag on either side passes — the filter cannot fire
/// without evidence.
pub fn pos_compatible(x: &Token, y: &Token) -> bool {
    match (x.pos, y.pos) {
        (Some(a), Some(b)) => a.is_open_class() && b.is_open_class() && a == b,
        (Some(a), None) => a.is_open_class(),
        (None, Some(b)) => b.is_open_class(),
        (None, None) => true,
    }
}

/// Projects the senses of one aligned pair. Each sense-tagged content
/// word with an aligned target token yields at most one record, tagged
/// with the rule that admitted it (dictionary support wins over the
/// orthographic exception when both hold).
pub fn project_sentence(
    pair: &BitextPair,
    links: &AlignmentSet,
    dict: &Dictionary,
    cfg: &ProjectionConfig,
) -> Vec<SenseRecord> {
    let mut records = Vec::new();
    for (i, word) in pair.source.iter().enumerate() {
        if !word.is_content_word() {
            continue;
        }
        let synset = word.synset.as_ref().expect("content word carries a synset");
        let Some(j) = links.target_of(i) else {
            continue;
        };
        let aligned = &pair.target[j];

        let rule = if dict.supports(word, aligned) {
            ProjectionRule::Dictionary
        } else if cfg.orthographic_exception_enabled && orthographic_match(word, aligned) {
            ProjectionRule::Orthographic
        } else {
            continue;
        };
        if cfg.pos_filter_enabled && !pos_compatible(word, aligned) {
            continue;
        }
        let lemma = aligned.sense_lemma();
        if let Some(wordnet) = &cfg.existing_wordnet {
            if wordnet.contains(synset, &lemma) {
                continue;
            }
        }
        records.push(SenseRecord {
            lemma,
            synset: synset.clone(),
            rule,
            provenance: Provenance {
                pair_id: pair.id.clone(),
                source: i,
                target: j,
            },
        });
    }
    records
}

/// Runs the full pipeline over a corpus: aligns each pair with
/// [`dbalign`], projects its senses, and accumulates one inventory.
pub fn project_corpus<'a, I>(pairs: I, dict: &Dictionary, cfg: &ProjectionConfig) -> SenseInventory
where
    I: IntoIterator<Item = &'a BitextPair>,
{
    let mut inventory = SenseInventory::new();
    for pair in pairs {
        let links = dbalign(pair, dict);
        for record in project_sentence(pair, &links, dict, cfg) {
            inventory.add(record);
        }
    }
    inventory
}
