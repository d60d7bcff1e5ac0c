//! Generated senses and the inventory that accumulates them.

use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

/// Which filter admitted a projection.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ProjectionRule {
    /// The (source, target) pair is in the bilingual dictionary.
    Dictionary,
    /// Source and target share the same orthographic form.
    Orthographic,
}

impl ProjectionRule {
    pub fn as_str(self) -> &'static str {
        match self {
            ProjectionRule::Dictionary => "DICTIONARY",
            ProjectionRule::Orthographic => "ORTHOGRAPHIC",
        }
    }
}

impl fmt::Display for ProjectionRule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for ProjectionRule {
    type Err = String;

    fn from_str(s: &str) -> Result<ProjectionRule, String> {
        match s {
            "DICTIONARY" => Ok(ProjectionRule::Dictionary),
            "ORTHOGRAPHIC" => Ok(ProjectionRule::Orthographic),
            other => Err(format!("unknown projection rule `{other}`")),
        }
    }
}

/// Where a sense came from: the bitext pair and the token indices of the
/// link it was projected across.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct Provenance {
    pub pair_id: String,
    pub source: usize,
    pub target: usize,
}

/// One generated sense: a target-language lemma attached to a synset,
/// together with the rule that admitted it and its provenance.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SenseRecord {
    pub lemma: String,
    pub synset: String,
    pub rule: ProjectionRule,
    pub provenance: Provenance,
}

/// Inventory key: a `(lemma, synset)` pairing.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SenseKey {
    pub lemma: String,
    pub synset: String,
}

impl SenseKey {
    pub fn new(lemma: impl Into<String>, synset: impl Into<String>) -> SenseKey {
        SenseKey {
            lemma: lemma.into(),
            synset: synset.into(),
        }
    }
}

/// One occurrence of a sense in the corpus.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SenseOccurrence {
    pub rule: ProjectionRule,
    pub provenance: Provenance,
}

/// Accumulates generated senses. Each `(lemma, synset)` key holds the
/// list of its occurrences; the count of a key is always the length of
/// that list, and re-adding an existing key appends instead of
/// duplicating.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SenseInventory {
    entries: BTreeMap<SenseKey, Vec<SenseOccurrence>>,
}

impl SenseInventory {
    pub fn new() -> SenseInventory {
        SenseInventory::default()
    }

    /// Adds one record, incrementing the count of its `(lemma, synset)`
    /// key by exactly one.
    pub fn add(&mut self, record: SenseRecord) {
        let key = SenseKey::new(record.lemma, record.synset);
        self.entries.entry(key).or_default().push(SenseOccurrence {
            rule: record.rule,
            provenance: record.provenance,
        });
    }

    /// Merges another inventory into this one. Counts add up, so merging
    /// shards of a corpus in any order yields the same totals.
    pub fn merge(&mut self, other: SenseInventory) {
        for (key, mut occurrences) in other.entries {
            match self.entries.entry(key) {
                Entry::Vacant(slot) => {
                    slot.insert(occurrences);
                }
                Entry::Occupied(mut slot) => slot.get_mut().append(&mut occurrences),
            }
        }
    }

    /// Number of distinct `(lemma, synset)` keys.
    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Occurrence count for one key; 0 when absent.
    pub fn count(&self, lemma: &str, synset: &str) -> usize {
        self.entries
            .get(&SenseKey::new(lemma, synset))
            .map_or(0, Vec::len)
    }

    /// Total occurrences across all keys.
    pub fn total(&self) -> usize {
        self.entries.values().map(Vec::len).sum()
    }

    pub fn keys(&self) -> impl Iterator<Item = &SenseKey> {
        self.entries.keys()
    }

    /// Entries in key order.
    pub fn iter(&self) -> impl Iterator<Item = (&SenseKey, &[SenseOccurrence])> {
        self.entries.iter().map(|(k, v)| (k, v.as_slice()))
    }

    /// Occurrence counts per rule for one entry, in rule order.
    pub fn rule_breakdown(occurrences: &[SenseOccurrence]) -> BTreeMap<ProjectionRule, usize> {
        let mut counts = BTreeMap::new();
        for occ in occurrences {
            *counts.entry(occ.rule).or_insert(0) += 1;
        }
        counts
    }

    /// Rebuilds an inventory from per-key occurrence lists, as read back
    /// from a serialized inventory.
    pub fn from_entries<I>(entries: I) -> SenseInventory
    where
        I: IntoIterator<Item = (SenseKey, Vec<SenseOccurrence>)>,
    {
        let mut inventory = SenseInventory::new();
        for (key, occurrences) in entries {
            for occ in occurrences {
                inventory.add(SenseRecord {
                    lemma: key.lemma.clone(),
                    synset: key.synset.clone(),
                    rule: occ.rule,
                    provenance: occ.provenance,
                });
            }
        }
        inventory
    }
}
