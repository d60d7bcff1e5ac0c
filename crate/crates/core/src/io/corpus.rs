//! Corpus JSONL: one bitext pair per line.
//!
//! ```json
//! {"id":"p1",
//!  "source":[{"surface":"hate","lemma":"hate","pos":"VERB","synset":"bn:00086717v"}],
//!  "target":[{"surface":"odio"}],
//!  "alignment":"0-0"}
//! ```
//!
//! `lemma`, `pos`, `synset` and `alignment` are optional; POS tags are
//! coarsened on ingestion and unknown tags become `OTHER`. Lines that do
//! not parse as JSON are hard errors; structurally valid records that
//! violate an invariant (out-of-range links, empty surfaces, duplicate
//! ids) are skipped and reported.

use std::collections::{BTreeSet, HashSet};
use std::io::BufRead;

use serde::Deserialize;

use crate::alignment::AlignmentLink;
use crate::io::{pharaoh, LoadError};
use crate::lex::{BitextPair, Pos, Sentence, Token};

/// A loaded corpus: bitext pairs with unique ids, in file order.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct CorpusDocument {
    pub pairs: Vec<BitextPair>,
}

impl CorpusDocument {
    pub fn new(pairs: Vec<BitextPair>) -> CorpusDocument {
        let mut seen = HashSet::new();
        assert!(
            pairs.iter().all(|p| seen.insert(p.id.as_str())),
            "pair ids must be unique"
        );
        CorpusDocument { pairs }
    }

    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }
}

/// A record that was dropped during loading, and why.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SkippedRecord {
    /// 1-based line in the file that caused the skip.
    pub line: usize,
    pub id: Option<String>,
    pub reason: String,
}

/// Result of loading a corpus: the document plus the skip report.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct CorpusLoad {
    pub document: CorpusDocument,
    pub skipped: Vec<SkippedRecord>,
}

#[derive(Deserialize)]
struct RawRecord {
    id: String,
    source: Vec<RawToken>,
    target: Vec<RawToken>,
    #[serde(default)]
    alignment: Option<String>,
}

#[derive(Deserialize)]
struct RawToken {
    surface: String,
    #[serde(default)]
    lemma: Option<String>,
    #[serde(default)]
    pos: Option<String>,
    #[serde(default)]
    synset: Option<String>,
}

pub fn load_corpus<R: BufRead>(reader: R) -> Result<CorpusLoad, LoadError> {
    let mut pairs: Vec<BitextPair> = Vec::new();
    let mut skipped: Vec<SkippedRecord> = Vec::new();
    let mut seen_ids: HashSet<String> = HashSet::new();

    for (idx, line) in reader.lines().enumerate() {
        let line_no = idx + 1;
        let line = line?;
        let line = line.trim();
        if line.is_empty() {
            continue;
        }
        let raw: RawRecord = serde_json::from_str(line)
            .map_err(|e| LoadError::format(line_no, format!("invalid record: {e}")))?;
        if raw.id.is_empty() {
            return Err(LoadError::format(line_no, "missing pair id"));
        }
        if !seen_ids.insert(raw.id.clone()) {
            skipped.push(SkippedRecord {
                line: line_no,
                id: Some(raw.id),
                reason: "duplicate pair id".into(),
            });
            continue;
        }
        match convert_record(raw) {
            Ok(pair) => pairs.push(pair),
            Err((id, reason)) => skipped.push(SkippedRecord {
                line: line_no,
                id: Some(id),
                reason,
            }),
        }
    }
    Ok(CorpusLoad {
        document: CorpusDocument { pairs },
        skipped,
    })
}

fn convert_record(raw: RawRecord) -> Result<BitextPair, (String, String)> {
    let source = convert_tokens(raw.source, "source").map_err(|r| (raw.id.clone(), r))?;
    let target = convert_tokens(raw.target, "target").map_err(|r| (raw.id.clone(), r))?;
    let base_links: BTreeSet<AlignmentLink> = match &raw.alignment {
        Some(text) => pharaoh::parse_pharaoh(text)
            .map_err(|e| (raw.id.clone(), format!("bad alignment: {e}")))?,
        None => BTreeSet::new(),
    };
    for link in &base_links {
        if link.source >= source.len() || link.target >= target.len() {
            return Err((
                raw.id,
                format!(
                    "alignment link {link} out of range for {}x{} tokens",
                    source.len(),
                    target.len()
                ),
            ));
        }
    }
    Ok(BitextPair {
        id: raw.id,
        source,
        target,
        base_links,
    })
}

fn convert_tokens(raw: Vec<RawToken>, side: &str) -> Result<Sentence, String> {
    let mut tokens = Vec::with_capacity(raw.len());
    for (k, t) in raw.into_iter().enumerate() {
        if t.surface.is_empty() {
            return Err(format!("empty surface for {side} token {k}"));
        }
        tokens.push(Token {
            surface: t.surface,
            lemma: t.lemma.filter(|l| !l.is_empty()),
            pos: t.pos.as_deref().map(Pos::coarse),
            synset: t.synset.filter(|s| !s.is_empty()),
        });
    }
    Ok(Sentence::new(tokens))
}

/// Replaces each pair's base links with the corresponding line of a
/// sidecar Pharaoh file. The sidecar must have exactly one line per
/// pair; pairs whose sidecar links are out of range are dropped and
/// reported.
pub fn override_base_links(
    load: &mut CorpusLoad,
    links_per_pair: &[BTreeSet<AlignmentLink>],
) -> Result<(), LoadError> {
    if links_per_pair.len() != load.document.pairs.len() {
        return Err(LoadError::Invalid(format!(
            "sidecar alignment file has {} lines but the corpus has {} pairs",
            links_per_pair.len(),
            load.document.pairs.len()
        )));
    }
    let old = std::mem::take(&mut load.document.pairs);
    for (index, (mut pair, links)) in old.into_iter().zip(links_per_pair).enumerate() {
        let in_range = links
            .iter()
            .all(|l| l.source < pair.source.len() && l.target < pair.target.len());
        if in_range {
            pair.base_links = links.clone();
            load.document.pairs.push(pair);
        } else {
            load.skipped.push(SkippedRecord {
                line: index + 1,
                id: Some(pair.id),
                reason: "sidecar alignment link out of range".into(),
            });
        }
    }
    Ok(())
}
