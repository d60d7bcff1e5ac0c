//! Wordnet-side TSV formats: the existing-wordnet file (`synset TAB
//! lemma`) consumed by the projection guard, and gold sense lists
//! (`lemma TAB synset`) for evaluation. Both use dictionary
//! normalization for lemmas and support `#` comments.

use std::collections::BTreeSet;
use std::io::BufRead;

use crate::io::LoadError;
use crate::normalize::normalize_entry;
use crate::project::WordnetIndex;

/// Loads `synset TAB lemma` lines into a [`WordnetIndex`].
pub fn load_wordnet_tsv<R: BufRead>(reader: R) -> Result<WordnetIndex, LoadError> {
    let mut index = WordnetIndex::new();
    for (synset, lemma) in tsv_pairs(reader)? {
        index.insert(synset, &lemma);
    }
    Ok(index)
}

/// Loads `lemma TAB synset` lines as normalized `(lemma, synset)` keys.
pub fn load_gold_senses<R: BufRead>(reader: R) -> Result<BTreeSet<(String, String)>, LoadError> {
    let mut keys = BTreeSet::new();
    for (lemma, synset) in tsv_pairs(reader)? {
        keys.insert((normalize_entry(&lemma), synset));
    }
    Ok(keys)
}

fn tsv_pairs<R: BufRead>(reader: R) -> Result<Vec<(String, String)>, LoadError> {
    let mut pairs = Vec::new();
    for (idx, line) in reader.lines().enumerate() {
        let line = line?;
        let line = line.trim_end_matches('\r');
        if line.starts_with('#') {
            continue;
        }
        let mut columns = line.split('\t');
        let (first, second) = match (columns.next(), columns.next(), columns.next()) {
            (Some(a), Some(b), None) => (a.trim(), b.trim()),
            _ => {
                return Err(LoadError::format(
                    idx + 1,
                    "expected exactly one tab per line",
                ))
            }
        };
        if first.is_empty() || second.is_empty() {
            return Err(LoadError::format(idx + 1, "empty column"));
        }
        pairs.push((first.to_string(), second.to_string()));
    }
    Ok(pairs)
}
