//! The bilingual dictionary: a set of normalized translation pairs with
//! lookup indexes for both languages.

use std::collections::{BTreeMap, BTreeSet};

use crate::lex::Token;
use crate::normalize::{normalize_entry, MWE_SEPARATOR};

/// Which column of the dictionary an entry belongs to.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LangSide {
    Source,
    Target,
}

/// A set of `(source entry, target entry)` translation pairs. Entries are
/// normalized on insertion (see [`normalize_entry`]) and may be multi-word
/// expressions. Pairs are stored directionally source→target with a
/// reverse index over the same pairs.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Dictionary {
    forward: BTreeMap<String, BTreeSet<String>>,
    reverse: BTreeMap<String, BTreeSet<String>>,
    pairs: usize,
    max_words: [usize; 2],
}

impl Dictionary {
    pub fn new() -> Dictionary {
        Dictionary::default()
    }

    /// Builds a dictionary from raw `(source, target)` pairs.
    pub fn from_pairs<'a, I>(pairs: I) -> Dictionary
    where
        I: IntoIterator<Item = (&'a str, &'a str)>,
    {
        let mut dict = Dictionary::new();
        for (source, target) in pairs {
            dict.insert(source, target);
        }
        dict
    }

    /// Inserts a translation pair, normalizing both entries. Returns
    /// whether the pair was new. Panics when either entry normalizes to
    /// the empty string.
    pub fn insert(&mut self, source: &str, target: &str) -> bool {
        let source = normalize_entry(source);
        let target = normalize_entry(target);
        assert!(
            !source.is_empty() && !target.is_empty(),
            "dictionary entries must be non-empty"
        );
        let added = self
            .forward
            .entry(source.clone())
            .or_default()
            .insert(target.clone());
        if added {
            self.pairs += 1;
            self.max_words[0] = self.max_words[0].max(word_count(&source));
            self.max_words[1] = self.max_words[1].max(word_count(&target));
            self.reverse.entry(target).or_default().insert(source);
        }
        added
    }

    /// Number of distinct translation pairs.
    pub fn len(&self) -> usize {
        self.pairs
    }

    pub fn is_empty(&self) -> bool {
        self.pairs == 0
    }

    /// Membership test on raw text; both sides are normalized first.
    pub fn contains(&self, source: &str, target: &str) -> bool {
        self.contains_normalized(&normalize_entry(source), &normalize_entry(target))
    }

    /// Membership test on already-normalized entries.
    pub fn contains_normalized(&self, source: &str, target: &str) -> bool {
        self.forward.get(source).is_some_and(|t| t.contains(target))
    }

    /// True when `entry` occurs in the given column. The entry is
    /// normalized first.
    pub fn contains_entry(&self, side: LangSide, entry: &str) -> bool {
        let entry = normalize_entry(entry);
        match side {
            LangSide::Source => self.forward.contains_key(&entry),
            LangSide::Target => self.reverse.contains_key(&entry),
        }
    }

    /// Length, in words, of the longest entry in the given column.
    pub fn max_entry_words(&self, side: LangSide) -> usize {
        match side {
            LangSide::Source => self.max_words[0],
            LangSide::Target => self.max_words[1],
        }
    }

    /// True when the token pair is supported by the dictionary, matching
    /// on case-folded surfaces first and on lemmas when both tokens carry
    /// one. The aligner's dictionary pass and the projection filter share
    /// this test so they cannot disagree.
    pub fn supports(&self, source: &Token, target: &Token) -> bool {
        if self.contains(&source.surface, &target.surface) {
            return true;
        }
        match (&source.lemma, &target.lemma) {
            (Some(ls), Some(lt)) => self.contains(ls, lt),
            _ => false,
        }
    }

    /// All pairs in lexicographic order.
    pub fn iter(&self) -> impl Iterator<Item = (&str, &str)> + '_ {
        self.forward
            .iter()
            .flat_map(|(s, targets)| targets.iter().map(move |t| (s.as_str(), t.as_str())))
    }
}

fn word_count(normalized: &str) -> usize {
    normalized.split(MWE_SEPARATOR).count()
}
